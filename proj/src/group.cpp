#include "coxdepth/group.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace coxdepth {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
  }
  throw std::logic_error("bad family");
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument(std::string("unknown family: ") + c);
}

GroupContext::GroupContext(Family f, int n) : family(f), rank(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

int GroupContext::generator_count() const {
  switch (family) {
    case Family::A: return rank - 1;
    case Family::B: return rank;
    case Family::D: return rank >= 2 ? rank : 0;
  }
  return 0;
}

std::uint64_t GroupContext::order() const {
  std::uint64_t result = 1;
  for (int k = 2; k <= rank; ++k) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(k), &result))
      throw std::overflow_error("group order exceeds 64 bits");
  }
  int sign_bits = family == Family::A ? 0 : (family == Family::B ? rank : rank - 1);
  for (int k = 0; k < sign_bits; ++k) {
    if (__builtin_mul_overflow(result, std::uint64_t{2}, &result))
      throw std::overflow_error("group order exceeds 64 bits");
  }
  return result;
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty window");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    int a = std::abs(v);
    if (a < 1 || a > n) throw std::invalid_argument("window entry out of range: " + std::to_string(v));
    if (seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("window repeats absolute value " + std::to_string(a));
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> win(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) win[static_cast<std::size_t>(i) - 1] = i;
  return SignedPermutation(std::move(win));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > size()) throw std::out_of_range("argument out of range");
  return i > 0 ? window_[static_cast<std::size_t>(i) - 1]
               : -window_[static_cast<std::size_t>(-i) - 1];
}

int SignedPermutation::neg_count() const {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (entry(i) != i) return false;
  return true;
}

bool SignedPermutation::member_of(const GroupContext& ctx) const {
  if (size() != ctx.rank) return false;
  switch (ctx.family) {
    case Family::A: return all_positive();
    case Family::B: return true;
    case Family::D: return neg_count() % 2 == 0;
  }
  return false;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> win(window_.size());
  for (int i = 1; i <= size(); ++i) {
    int v = entry(i);
    win[static_cast<std::size_t>(std::abs(v)) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(win));
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<int> win(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) win[static_cast<std::size_t>(i) - 1] = u(v(i));
  return SignedPermutation(std::move(win));
}

std::uint64_t window_code(const SignedPermutation& w) {
  const int n = w.size();
  std::uint64_t rank = 0, signs = 0;
  // Lehmer code of the underlying unsigned permutation.
  for (int i = 1; i <= n; ++i) {
    int a = std::abs(w.entry(i));
    int smaller = 0;
    for (int k = i + 1; k <= n; ++k)
      if (std::abs(w.entry(k)) < a) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller);
    signs = (signs << 1) | (w.entry(i) < 0 ? 1u : 0u);
  }
  return (rank << n) | signs;
}

Reflection Reflection::swap(int i, int j) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("swap requires 1 <= i < j");
  return Reflection(Kind::Swap, i, j);
}

Reflection Reflection::bar_swap(int i, int j) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("bar_swap requires 1 <= i < j");
  return Reflection(Kind::BarSwap, i, j);
}

Reflection Reflection::bar_fix(int i) {
  if (i < 1) throw std::invalid_argument("bar_fix requires i >= 1");
  return Reflection(Kind::BarFix, i, i);
}

bool Reflection::legal_in(const GroupContext& ctx) const {
  if (j_ > ctx.rank) return false;
  switch (kind_) {
    case Kind::Swap: return true;
    case Kind::BarSwap: return ctx.family != Family::A;
    case Kind::BarFix: return ctx.family == Family::B;
  }
  return false;
}

SignedPermutation Reflection::as_permutation(int n) const {
  if (j_ > n) throw std::invalid_argument("reflection exceeds rank");
  return apply_reflection(SignedPermutation::identity(n), *this);
}

std::string Reflection::str() const {
  switch (kind_) {
    case Kind::Swap: return "t(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    case Kind::BarSwap: return "t(-" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    case Kind::BarFix: return "t(-" + std::to_string(i_) + "," + std::to_string(i_) + ")";
  }
  return {};
}

SignedPermutation apply_reflection(const SignedPermutation& w, const Reflection& t) {
  if (t.j() > w.size()) throw std::invalid_argument("reflection exceeds rank");
  std::vector<int> win = w.window();
  auto& a = win[static_cast<std::size_t>(t.i()) - 1];
  auto& b = win[static_cast<std::size_t>(t.j()) - 1];
  switch (t.kind()) {
    case Reflection::Kind::Swap:
      std::swap(a, b);
      break;
    case Reflection::Kind::BarSwap:
      std::swap(a, b);
      a = -a;
      b = -b;
      break;
    case Reflection::Kind::BarFix:
      a = -a;
      break;
  }
  return SignedPermutation(std::move(win));
}

std::vector<Reflection> all_reflections(const GroupContext& ctx) {
  std::vector<Reflection> ts;
  const int n = ctx.rank;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) ts.push_back(Reflection::swap(i, j));
  if (ctx.family != Family::A)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) ts.push_back(Reflection::bar_swap(i, j));
  if (ctx.family == Family::B)
    for (int i = 1; i <= n; ++i) ts.push_back(Reflection::bar_fix(i));
  return ts;
}

SignedPermutation apply_simple(const SignedPermutation& w, int letter, Family f) {
  if (letter == 0) {
    if (f == Family::A) throw std::domain_error("family A has no generator s_0");
    if (f == Family::B) return apply_reflection(w, Reflection::bar_fix(1));
    return apply_reflection(w, Reflection::bar_swap(1, 2));
  }
  return apply_reflection(w, Reflection::swap(letter, letter + 1));
}

SignedPermutation evaluate_word(const SimpleWord& word, const GroupContext& ctx) {
  SignedPermutation w = SignedPermutation::identity(ctx.rank);
  for (int letter : word) {
    if (letter < 0 || letter >= std::max(ctx.rank, 2) || (letter == 0 && ctx.family == Family::A) ||
        (letter > 0 && letter + 1 > ctx.rank))
      throw std::invalid_argument("letter out of range: " + std::to_string(letter));
    w = apply_simple(w, letter, ctx.family);
  }
  return w;
}

bool is_right_descent(const SignedPermutation& w, int letter, Family f) {
  if (letter == 0) {
    if (f == Family::B) return w.entry(1) < 0;
    if (f == Family::D) return w.entry(1) + w.entry(2) < 0;
    throw std::domain_error("family A has no generator s_0");
  }
  return w.entry(letter) > w.entry(letter + 1);
}

SimpleWord reflection_word(const Reflection& t, const GroupContext& ctx) {
  if (!t.legal_in(ctx)) throw std::domain_error(t.str() + " is not a reflection of the context");
  SimpleWord word;
  const int i = t.i(), j = t.j();
  switch (t.kind()) {
    case Reflection::Kind::Swap:
      // s_{j-1} ... s_{i+1} s_i s_{i+1} ... s_{j-1}
      for (int k = j - 1; k >= i; --k) word.push_back(k);
      for (int k = i + 1; k <= j - 1; ++k) word.push_back(k);
      break;
    case Reflection::Kind::BarFix:
      // s_{i-1} ... s_1 s_0 s_1 ... s_{i-1}
      for (int k = i - 1; k >= 1; --k) word.push_back(k);
      word.push_back(0);
      for (int k = 1; k <= i - 1; ++k) word.push_back(k);
      break;
    case Reflection::Kind::BarSwap:
      // s_{i-1}..s_1 s_{j-1}..s_2 [core] s_2..s_{j-1} s_1 s_2..s_{i-1},
      // where the core is s_0 s_1 s_0 in type B and the single s_0^D in type D.
      for (int k = i - 1; k >= 1; --k) word.push_back(k);
      for (int k = j - 1; k >= 2; --k) word.push_back(k);
      if (ctx.family == Family::B) {
        word.push_back(0);
        word.push_back(1);
        word.push_back(0);
      } else {
        word.push_back(0);
      }
      for (int k = 2; k <= j - 1; ++k) word.push_back(k);
      for (int k = 1; k <= i - 1; ++k) word.push_back(k);
      break;
  }
  return word;
}

SimpleWord reduced_word(const SignedPermutation& w, const GroupContext& ctx) {
  if (!w.member_of(ctx)) throw std::domain_error("element not in the context group");
  SimpleWord word;
  SignedPermutation cur = w;
  const int gens = ctx.generator_count();
  const int lo = ctx.family == Family::A ? 1 : 0;
  while (!cur.is_identity()) {
    bool found = false;
    for (int s = lo; s < lo + gens; ++s) {
      if (is_right_descent(cur, s, ctx.family)) {
        cur = apply_simple(cur, s, ctx.family);
        word.push_back(s);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("non-identity element with no right descent");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SignedPermutation parse_window(std::string_view text, const GroupContext& ctx) {
  std::vector<int> win;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0)
      throw std::invalid_argument("malformed window entry: '" + std::string(tok) + "'");
    win.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  SignedPermutation w{std::move(win)};
  if (w.size() != ctx.rank)
    throw std::invalid_argument("window has " + std::to_string(w.size()) + " entries, expected " +
                                std::to_string(ctx.rank));
  if (ctx.family == Family::A && !w.all_positive())
    throw std::domain_error("family A admits no negative entries");
  if (ctx.family == Family::D && w.neg_count() % 2 != 0)
    throw std::domain_error("family D requires an even number of negative entries");
  return w;
}

std::string format_window(const SignedPermutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w.entry(i));
  }
  return out;
}

namespace {

void enumerate_rec(const GroupContext& ctx, std::vector<int>& win, std::vector<bool>& used,
                   int pos, int neg_so_far,
                   const std::function<void(const SignedPermutation&)>& visit) {
  const int n = ctx.rank;
  if (pos > n) {
    visit(SignedPermutation(win));
    return;
  }
  // Candidate values in increasing order: -n < ... < -1 < 1 < ... < n.
  for (int v = -n; v <= n; ++v) {
    if (v == 0) continue;
    if (v < 0 && ctx.family == Family::A) continue;
    int a = std::abs(v);
    if (used[static_cast<std::size_t>(a)]) continue;
    if (ctx.family == Family::D && pos == n && (neg_so_far + (v < 0 ? 1 : 0)) % 2 != 0) continue;
    used[static_cast<std::size_t>(a)] = true;
    win[static_cast<std::size_t>(pos) - 1] = v;
    enumerate_rec(ctx, win, used, pos + 1, neg_so_far + (v < 0 ? 1 : 0), visit);
    used[static_cast<std::size_t>(a)] = false;
  }
}

}  // namespace

void for_each_element(const GroupContext& ctx,
                      const std::function<void(const SignedPermutation&)>& visit,
                      std::uint64_t cap) {
  if (ctx.order() > cap)
    throw std::length_error("group order " + std::to_string(ctx.order()) +
                            " exceeds enumeration cap " + std::to_string(cap));
  std::vector<int> win(static_cast<std::size_t>(ctx.rank));
  std::vector<bool> used(static_cast<std::size_t>(ctx.rank) + 1, false);
  enumerate_rec(ctx, win, used, 1, 0, visit);
}

std::vector<SignedPermutation> all_elements(const GroupContext& ctx, std::uint64_t cap) {
  std::vector<SignedPermutation> out;
  out.reserve(ctx.order() > cap ? 0 : ctx.order());
  for_each_element(ctx, [&](const SignedPermutation& w) { out.push_back(w); }, cap);
  return out;
}

}  // namespace coxdepth
