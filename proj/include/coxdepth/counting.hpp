#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "coxdepth/cayley.hpp"
#include "coxdepth/group.hpp"

namespace coxdepth {

/// One statistic's histogram over a group, with its provenance.
struct CountTable {
  Family family;
  int rank;
  std::string statistic;
  std::string source;  // "enumerated" or "closed_form"
  std::map<int, std::uint64_t> counts;

  std::uint64_t total() const;
};

std::uint64_t binomial(int n, int k);
std::uint64_t catalan(int n);
/// F_1 = F_2 = 1.
std::uint64_t fibonacci(int m);

/// Histogram of the closed-form depth over the whole group.
CountTable depth_distribution(const GroupContext& ctx);

/// #{w : dp(w) = l_S(w)} by enumeration.
std::uint64_t count_depth_eq_length(const GroupContext& ctx);
/// Catalan C_{n+1} for B; (n+3) C_n / 2 - 1 for D (n >= 2).
std::uint64_t closed_form_depth_eq_length(const GroupContext& ctx);

/// #{w : l_T(w) = dp(w) = l_S(w)} by enumeration over the Bruhat graph.
std::uint64_t count_boolean(const CayleyGraph& graph);
std::uint64_t count_boolean(const GroupContext& ctx);
/// Fibonacci F_{2n+1} for B; for D (n >= 4) the exact Z[sqrt 5] evaluation
/// of c_a a^n + c_b b^n with a, b = (3 +- sqrt 5)/2.
std::uint64_t closed_form_boolean(const GroupContext& ctx);

/// #{w : l_T = dp = l_S = k}.
std::uint64_t count_boolean_by_length(const CayleyGraph& graph, int k);
std::uint64_t count_boolean_by_length(const GroupContext& ctx, int k);
std::uint64_t closed_form_boolean_by_length(const GroupContext& ctx, int k);

/// Per-length boolean counts as a table (all k up to the largest nonzero).
CountTable boolean_length_table(const GroupContext& ctx);

/// All w with 2 dp(w) = l_T(w) + l_S(w), in lexicographic order.
std::vector<SignedPermutation> shallow_elements(const CayleyGraph& graph);
std::vector<SignedPermutation> shallow_elements(const GroupContext& ctx);

/// Columns: family, n, statistic, key, count, source.
void write_csv(const std::vector<CountTable>& tables, std::ostream& out);

}  // namespace coxdepth
