#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxdepth/group.hpp"

namespace coxdepth {

/// Brute-force baselines on the fully materialized Bruhat graph of a small
/// group: depth as a weighted shortest path from the identity, reflection
/// length as the unweighted distance, reduced reflection length as the
/// distance through length-additive steps, and Coxeter length by
/// simple-generator search.  Edge weights are derived from the
/// simple-generator distances of the reflections themselves, so none of the
/// distances here depend on the closed-form statistics.
///
/// Construction materializes everything; afterwards the graph is immutable
/// and queries may run concurrently.
class CayleyGraph {
 public:
  /// 10^6 unless the COXDEPTH_MAX_ORDER environment variable overrides it.
  static std::uint64_t default_max_order();

  explicit CayleyGraph(const GroupContext& ctx, std::uint64_t max_order = default_max_order());

  const GroupContext& context() const { return ctx_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Reflection>& reflections() const { return reflections_; }
  const SignedPermutation& element(std::size_t index) const { return elements_[index]; }
  std::size_t index_of(const SignedPermutation& w) const;

  int depth(const SignedPermutation& w) const { return depth_[index_of(w)]; }
  int reflection_length(const SignedPermutation& w) const { return lt_[index_of(w)]; }
  int reduced_reflection_length(const SignedPermutation& w) const { return lr_[index_of(w)]; }
  int coxeter_length(const SignedPermutation& w) const { return ls_[index_of(w)]; }

  const std::vector<int>& depth_table() const { return depth_; }
  const std::vector<int>& reflection_length_table() const { return lt_; }
  const std::vector<int>& reduced_reflection_length_table() const { return lr_; }
  const std::vector<int>& coxeter_length_table() const { return ls_; }

  /// Reflection length recomputed by Dyer's letter-omission criterion on a
  /// single reduced word; used only to cross-validate the graph distance.
  int reflection_length_by_omission(const SignedPermutation& w) const;

  struct DeltaReport {
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
  };

  /// Checks d(w) - dp(t) <= d(wt) for every element and reflection, with d
  /// the closed-form depth.
  DeltaReport check_depth_delta() const;

 private:
  GroupContext ctx_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<Reflection> reflections_;
  std::vector<int> reflection_ls_;  // simple-generator distance of each reflection
  std::vector<int> ls_, lt_, lr_, depth_;
};

}  // namespace coxdepth
