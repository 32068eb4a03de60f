#pragma once

#include <unordered_map>
#include <vector>

#include "coxdepth/group.hpp"

namespace coxdepth {

/// A short signed window used for pattern containment.
using SignedPattern = std::vector<int>;

/// dp = l_S in B_n iff all six are avoided.
const std::vector<SignedPattern>& b_depth_eq_length_patterns();
/// dp = l_S in D_n iff all twenty are avoided.
const std::vector<SignedPattern>& d_depth_eq_length_patterns();
/// l_T = dp = l_S in B_n iff all ten are avoided.
const std::vector<SignedPattern>& b_boolean_patterns();
/// l_T = dp = l_S in D_n iff all twenty are avoided.
const std::vector<SignedPattern>& d_boolean_patterns();

/// True iff some subsequence of w matches p in signs and in the relative
/// order of absolute values.
bool contains_pattern(const SignedPermutation& w, const SignedPattern& p);

bool avoids_all(const SignedPermutation& w, const std::vector<SignedPattern>& patterns);

bool depth_equals_length(const SignedPermutation& w, const GroupContext& ctx);

/// Tenner's criterion: some (equivalently, any) reduced word has no
/// repeated letter.
bool is_boolean(const SignedPermutation& w, const GroupContext& ctx);

/// Searches the reduced words of elements for a consecutive s_i s_j s_i,
/// memoized across queries on the same context.
class ShortBraidSearch {
 public:
  explicit ShortBraidSearch(const GroupContext& ctx) : ctx_(ctx) {}
  bool is_short_braid_avoiding(const SignedPermutation& w);

 private:
  bool has_braid(const SignedPermutation& w);
  bool braid_capped(const SignedPermutation& w) const;

  GroupContext ctx_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

bool is_short_braid_avoiding(const SignedPermutation& w, const GroupContext& ctx);

/// In B_n these are exactly the short-braid-avoiding elements.
bool is_fully_commutative_top_and_bottom(const SignedPermutation& w, const GroupContext& ctx);

}  // namespace coxdepth
