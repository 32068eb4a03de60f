#pragma once

#include <cstdint>

#include "coxdepth/group.hpp"

namespace coxdepth {

/// Coxeter length split into its inversion statistics.  A pair counted by
/// both inv and nsp contributes twice to the type B/D totals.
struct LengthBreakdown {
  int inv;   // #{i<j : w(i) > w(j)}
  int neg;   // #{i : w(i) < 0}
  int nsp;   // #{i<j : w(i)+w(j) < 0}
  int total; // inv+neg+nsp (B), inv+nsp (D), inv (A)
};

LengthBreakdown length(const SignedPermutation& w, const GroupContext& ctx);

/// dp(t): j-i for swaps; i+j-1 (B) or i+j-2 (D) for bar swaps; i for bar fixes.
int reflection_depth(const Reflection& t, const GroupContext& ctx);

/// l_S(t) = 2 dp(t) - 1.
int reflection_length(const Reflection& t, const GroupContext& ctx);

/// Depth split into the three terms of its closed formula.
struct DepthBreakdown {
  int exceedance_sum;  // sum of w(i)-i over exceedances in the window
  int neg_abs_sum;     // sum of |w(i)| over negative entries
  int oddness;         // o^B or o^D (0 in family A)
  int correction;      // (o^B-neg)/2 (B), o^D-neg (D), 0 (A)
  int total;
};

DepthBreakdown depth(const SignedPermutation& w, const GroupContext& ctx);

/// The reformulation summing exceedances over all of [-n,n] \ {0}.
/// Families B and D only; always equals depth(w).total.
int depth_alt(const SignedPermutation& w, const GroupContext& ctx);

struct MaxDepthProfile {
  int max_depth;
  std::uint64_t achievers;
};

/// B: n(n+1)/2 attained only by the negative identity.  D (n >= 2):
/// C(n,2)+floor(n/2) attained by 2^((n-2)/2) or 2^((n+1)/2) elements.
MaxDepthProfile max_depth_profile(const GroupContext& ctx);

}  // namespace coxdepth
