#include "coxdepth/classify.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "coxdepth/stats.hpp"

namespace coxdepth {

const std::vector<SignedPattern>& b_depth_eq_length_patterns() {
  // The class is closed under inversion, so the list carries [-3,2,1]
  // alongside its inverse [3,2,-1]; without it the characterization fails
  // at [-3,2,1] itself.
  static const std::vector<SignedPattern> patterns = {
      {-1, -2}, {-2, -1}, {1, -2}, {3, 2, 1}, {3, 2, -1}, {3, 1, -2}, {-3, 2, 1},
  };
  return patterns;
}

const std::vector<SignedPattern>& d_depth_eq_length_patterns() {
  static const std::vector<SignedPattern> patterns = {
      {-1, -2, -3}, {1, -2, -3}, {-2, -1, -3}, {2, -1, -3}, {-2, 1, -3},
      {2, 1, -3},   {-3, -1, -2}, {3, -1, -2}, {-3, 1, -2}, {3, 1, -2},
      {-3, 2, 1},   {3, 2, 1},   {-3, 2, -1}, {3, 2, -1},  {-1, -3, -2},
      {1, -3, -2},  {-2, -3, -1}, {-2, -3, 1}, {2, -3, -1}, {2, -3, 1},
  };
  return patterns;
}

const std::vector<SignedPattern>& b_boolean_patterns() {
  static const std::vector<SignedPattern> patterns = {
      {-1, -2}, {-2, -1}, {1, -2},     {3, 2, 1},     {3, 2, -1},
      {-3, 2, 1}, {3, -2, 1}, {3, 4, 1, 2}, {3, 4, -1, 2}, {-3, 4, 1, 2},
  };
  return patterns;
}

const std::vector<SignedPattern>& d_boolean_patterns() {
  // [3,4,-1,2], the inverse of the listed [-3,4,1,2], is required for the
  // avoided class to be closed under inversion; D_5 has non-boolean
  // elements avoiding the other twenty.
  static const std::vector<SignedPattern> patterns = {
      {-1, -2, -3}, {-1, -3, -2}, {-2, -1, -3},   {-2, -3, -1},   {-3, -1, -2},
      {-3, -2, -1}, {3, 2, 1},    {3, 4, 1, 2},   {3, 2, -1},     {3, -1, -2},
      {3, 4, -1, -2}, {3, 4, -2, -1}, {-3, 2, 1},  {-2, -3, 1},    {-3, 4, 1, 2},
      {-4, -3, 1, 2}, {1, -2},    {3, -2, 1},     {-3, 2, -1},    {-3, 4, -1, 2},
      {3, 4, -1, 2},
  };
  return patterns;
}

namespace {

bool matches_at(const SignedPermutation& w, const SignedPattern& p, const std::vector<int>& pos) {
  const int k = static_cast<int>(p.size());
  for (int a = 0; a < k; ++a) {
    if ((w.entry(pos[static_cast<std::size_t>(a)]) < 0) != (p[static_cast<std::size_t>(a)] < 0))
      return false;
    for (int b = a + 1; b < k; ++b) {
      bool wless = std::abs(w.entry(pos[static_cast<std::size_t>(a)])) <
                   std::abs(w.entry(pos[static_cast<std::size_t>(b)]));
      bool pless = std::abs(p[static_cast<std::size_t>(a)]) < std::abs(p[static_cast<std::size_t>(b)]);
      if (wless != pless) return false;
    }
  }
  return true;
}

}  // namespace

bool contains_pattern(const SignedPermutation& w, const SignedPattern& p) {
  const int n = w.size();
  const int k = static_cast<int>(p.size());
  if (k > n) return false;
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) pos[static_cast<std::size_t>(a)] = a + 1;
  for (;;) {
    if (matches_at(w, p, pos)) return true;
    int a = k - 1;
    while (a >= 0 && pos[static_cast<std::size_t>(a)] == n - k + a + 1) --a;
    if (a < 0) return false;
    ++pos[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < k; ++b)
      pos[static_cast<std::size_t>(b)] = pos[static_cast<std::size_t>(b) - 1] + 1;
  }
}

bool avoids_all(const SignedPermutation& w, const std::vector<SignedPattern>& patterns) {
  for (const SignedPattern& p : patterns)
    if (contains_pattern(w, p)) return false;
  return true;
}

bool depth_equals_length(const SignedPermutation& w, const GroupContext& ctx) {
  return depth(w, ctx).total == length(w, ctx).total;
}

bool is_boolean(const SignedPermutation& w, const GroupContext& ctx) {
  SimpleWord word = reduced_word(w, ctx);
  std::set<int> seen(word.begin(), word.end());
  return seen.size() == word.size();
}

bool ShortBraidSearch::braid_capped(const SignedPermutation& w) const {
  // Some reduced word of w ends in s_a s_b s_a, i.e. peeling a, b, a
  // descends three times.  Commuting pairs cannot descend three times, so
  // the braid condition m(a,b) >= 3 is automatic.
  const int lo = ctx_.family == Family::A ? 1 : 0;
  const int gens = ctx_.generator_count();
  for (int a = lo; a < lo + gens; ++a) {
    if (!is_right_descent(w, a, ctx_.family)) continue;
    SignedPermutation wa = apply_simple(w, a, ctx_.family);
    for (int b = lo; b < lo + gens; ++b) {
      if (b == a || !is_right_descent(wa, b, ctx_.family)) continue;
      SignedPermutation wab = apply_simple(wa, b, ctx_.family);
      if (is_right_descent(wab, a, ctx_.family)) return true;
    }
  }
  return false;
}

bool ShortBraidSearch::has_braid(const SignedPermutation& w) {
  auto it = memo_.find(window_code(w));
  if (it != memo_.end()) return it->second;
  bool result = braid_capped(w);
  if (!result) {
    const int lo = ctx_.family == Family::A ? 1 : 0;
    for (int s = lo; s < lo + ctx_.generator_count() && !result; ++s)
      if (is_right_descent(w, s, ctx_.family))
        result = has_braid(apply_simple(w, s, ctx_.family));
  }
  memo_.emplace(window_code(w), result);
  return result;
}

bool ShortBraidSearch::is_short_braid_avoiding(const SignedPermutation& w) {
  if (!w.member_of(ctx_)) throw std::domain_error("element not in the context group");
  return !has_braid(w);
}

bool is_short_braid_avoiding(const SignedPermutation& w, const GroupContext& ctx) {
  ShortBraidSearch search(ctx);
  return search.is_short_braid_avoiding(w);
}

bool is_fully_commutative_top_and_bottom(const SignedPermutation& w, const GroupContext& ctx) {
  if (ctx.family != Family::B)
    throw std::domain_error("fully commutative top-and-bottom is a type B notion here");
  return is_short_braid_avoiding(w, ctx);
}

}  // namespace coxdepth
