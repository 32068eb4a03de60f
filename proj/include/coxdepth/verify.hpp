#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxdepth/cayley.hpp"

namespace coxdepth {

struct VerificationResult {
  std::string name;
  bool ok;
  std::string detail;
};

/// Runs the whole invariant suite for one family at ranks 1..max_n
/// (2..max_n for D): closed formulas against graph distances, factorization
/// invariants, classification equivalences, enumeration identities, the
/// depth-delta lemma, and the structural block/word properties.
std::vector<VerificationResult> run_verification(
    Family family, int max_n, int jobs = 0,
    std::uint64_t max_order = CayleyGraph::default_max_order());

bool all_passed(const std::vector<VerificationResult>& results);

}  // namespace coxdepth
