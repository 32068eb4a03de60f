#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coxdepth {

enum class Family { A, B, D };

char family_letter(Family f);
Family family_from_letter(char c);

/// Rank and family together fix the simple generators, the reflection set,
/// and which length/depth formulas apply.
struct GroupContext {
  Family family;
  int rank;

  GroupContext(Family f, int n);

  /// n-1 for A, n for B and D.  The degenerate D_1 has none.
  int generator_count() const;

  /// n! (A), 2^n n! (B), 2^(n-1) n! (D).  Throws std::overflow_error
  /// if the value does not fit in 64 bits.
  std::uint64_t order() const;

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

/// A signed permutation stored in window notation [w(1),...,w(n)].
/// The action on negative arguments is implicit via w(-i) = -w(i).
/// Family-A elements are sign-free windows; family-D elements have an
/// even number of negative entries.
class SignedPermutation {
 public:
  /// Validates that the absolute values form a permutation of [n].
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }

  /// w(i) for i in [-n,n] \ {0}.
  int operator()(int i) const;

  /// Window entry at 1-based position (same as operator() on positive i).
  int entry(int pos) const { return window_[static_cast<std::size_t>(pos) - 1]; }

  const std::vector<int>& window() const { return window_; }

  int neg_count() const;
  bool all_positive() const { return neg_count() == 0; }
  bool is_identity() const;
  bool member_of(const GroupContext& ctx) const;

  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  auto operator<=>(const SignedPermutation& o) const { return window_ <=> o.window_; }

 private:
  std::vector<int> window_;
};

/// (u v)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

/// Packs a window into a 64-bit code (Lehmer rank of the absolute values
/// combined with the sign bits).  Injective for fixed n <= 18.
std::uint64_t window_code(const SignedPermutation& w);

/// One of t_{ij}, t_{\bar i j}, t_{\bar i i}, with 1 <= i < j for the
/// first two kinds.  BarFix is only legal in family B, BarSwap in B and D.
class Reflection {
 public:
  enum class Kind { Swap, BarSwap, BarFix };

  static Reflection swap(int i, int j);
  static Reflection bar_swap(int i, int j);
  static Reflection bar_fix(int i);

  Kind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }  // equals i() for BarFix

  bool legal_in(const GroupContext& ctx) const;
  SignedPermutation as_permutation(int n) const;
  std::string str() const;

  friend bool operator==(const Reflection&, const Reflection&) = default;

 private:
  Reflection(Kind k, int i, int j) : kind_(k), i_(i), j_(j) {}
  Kind kind_;
  int i_;
  int j_;
};

/// Right multiplication w * t in window notation: Swap exchanges two window
/// positions, BarSwap exchanges and negates both, BarFix negates one.
SignedPermutation apply_reflection(const SignedPermutation& w, const Reflection& t);

/// All reflections of the context, n(n-1)/2 (A), n^2 (B), n^2-n (D).
std::vector<Reflection> all_reflections(const GroupContext& ctx);

/// Letters index simple generators: 0 is s_0^B or s_0^D depending on the
/// family, i >= 1 is the adjacent transposition s_i.
using SimpleWord = std::vector<int>;

SignedPermutation apply_simple(const SignedPermutation& w, int letter, Family f);
SignedPermutation evaluate_word(const SimpleWord& word, const GroupContext& ctx);
bool is_right_descent(const SignedPermutation& w, int letter, Family f);

/// The palindromic reduced word of a reflection (length 2 dp(t) - 1).
SimpleWord reflection_word(const Reflection& t, const GroupContext& ctx);

/// A reduced word for w, peeling the smallest right descent first.
SimpleWord reduced_word(const SignedPermutation& w, const GroupContext& ctx);

/// Parses a comma-separated window ("-2,1,3") and checks it against ctx.
SignedPermutation parse_window(std::string_view text, const GroupContext& ctx);
std::string format_window(const SignedPermutation& w);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Visits every element of the group exactly once, in lexicographic window
/// order.  Throws std::length_error if the order exceeds the cap.
void for_each_element(const GroupContext& ctx,
                      const std::function<void(const SignedPermutation&)>& visit,
                      std::uint64_t cap = kDefaultEnumerationCap);

std::vector<SignedPermutation> all_elements(const GroupContext& ctx,
                                            std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace coxdepth
