#pragma once

#include <string>
#include <vector>

#include "coxdepth/group.hpp"

namespace coxdepth {

/// A product w = t_1 ... t_r of reflections together with its cost ledger
/// and the chain of prefix products.  Output of the sorting algorithms
/// satisfies: product equals w, depth_cost = dp(w), length_cost = l_S(w),
/// and every step climbs the right weak order by exactly l_S(t_i).
struct Factorization {
  std::vector<Reflection> reflections;
  int depth_cost = 0;
  int length_cost = 0;
  std::vector<SignedPermutation> trace;  // e = w_0, w_1, ..., w_r = w
};

/// True iff l_S(w) = l_S(w t) + l_S(t), decided by window conditions alone.
bool is_reduced_step(const SignedPermutation& w, const Reflection& t, const GroupContext& ctx);

/// Depth-realizing reduced reflection factorization in B_n.
Factorization sort_b(const SignedPermutation& w);

/// Depth-realizing reduced reflection factorization in D_n.
Factorization sort_d(const SignedPermutation& w);

/// Dispatches on the family (family A uses the type B sort, which emits
/// only plain swaps on a sign-free window).
Factorization depth_factorization(const SignedPermutation& w, const GroupContext& ctx);

/// Concatenates the palindromic words of the factors; for algorithm output
/// the result is a reduced word for w.
SimpleWord expand_to_word(const Factorization& f, const GroupContext& ctx);

struct CheckReport {
  struct Item {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_ok() const;
};

/// Recomputes all four factorization invariants independently.
CheckReport verify(const Factorization& f, const SignedPermutation& w, const GroupContext& ctx);

}  // namespace coxdepth
