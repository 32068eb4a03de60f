#include "coxdepth/factorize.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "coxdepth/blocks.hpp"
#include "coxdepth/stats.hpp"

namespace coxdepth {

namespace {

// Step 1 selection: position of the maximal entry with w(i) > i inside
// [lo, hi], or 0 if none.
int max_exceedance_position(const SignedPermutation& w, int lo, int hi) {
  int best = 0;
  for (int i = lo; i <= hi; ++i)
    if (w.entry(i) > i && (best == 0 || w.entry(i) > w.entry(best))) best = i;
  return best;
}

// Position j of the minimal entry among i < j <= w(i).
int shuffle_target(const SignedPermutation& w, int i) {
  int j = 0;
  for (int k = i + 1; k <= w.entry(i); ++k)
    if (j == 0 || w.entry(k) < w.entry(j)) j = k;
  return j;
}

// Positions (i < j) of the two negative entries of largest absolute value.
std::pair<int, int> most_negative_pair(const SignedPermutation& w) {
  int p1 = 0, p2 = 0;  // p1 holds the most negative entry
  for (int k = 1; k <= w.size(); ++k) {
    if (w.entry(k) >= 0) continue;
    if (p1 == 0 || w.entry(k) < w.entry(p1)) {
      p2 = p1;
      p1 = k;
    } else if (p2 == 0 || w.entry(k) < w.entry(p2)) {
      p2 = k;
    }
  }
  return {std::min(p1, p2), std::max(p1, p2)};
}

// Sorts one indecomposable B-block to the identity; emitted reflections use
// absolute window positions (local position + offset).
void sort_block_b(SignedPermutation w, int offset, std::vector<Reflection>& moves) {
  const int n = w.size();
  for (;;) {
    if (int i = max_exceedance_position(w, 1, n); i != 0) {
      int j = shuffle_target(w, i);
      w = apply_reflection(w, Reflection::swap(i, j));
      moves.push_back(Reflection::swap(offset + i, offset + j));
      continue;
    }
    int negs = w.neg_count();
    if (negs == 0) break;
    if (negs == 1) {
      int i = 1;
      while (w.entry(i) > 0) ++i;
      w = apply_reflection(w, Reflection::bar_fix(i));
      moves.push_back(Reflection::bar_fix(offset + i));
    } else {
      auto [i, j] = most_negative_pair(w);
      w = apply_reflection(w, Reflection::bar_swap(i, j));
      moves.push_back(Reflection::bar_swap(offset + i, offset + j));
    }
  }
}

// Sorts one D-indecomposable block.  Each pass recomputes the relevant
// region (trailing entries already in natural position are disregarded)
// and the boundary of its last type B block.
void sort_block_d(SignedPermutation w, int offset, std::vector<Reflection>& moves) {
  for (;;) {
    int hi = w.size();
    while (hi >= 1 && w.entry(hi) == hi) --hi;
    if (hi == 0) break;
    // Last B-cut strictly before hi; the window restricted to [1, hi] is a
    // signed permutation of [hi] because the stripped suffix is natural.
    int last_cut = 0, max_abs = 0;
    for (int p = 1; p < hi; ++p) {
      max_abs = std::max(max_abs, std::abs(w.entry(p)));
      if (max_abs == p) last_cut = p;
    }
    int lo = last_cut + 1;
    if (int i = max_exceedance_position(w, lo, hi); i != 0) {
      // Step 1: shuffle within the last relevant B-block.
      int j = shuffle_target(w, i);
      w = apply_reflection(w, Reflection::swap(i, j));
      moves.push_back(Reflection::swap(offset + i, offset + j));
    } else if (lo > 1) {
      // Step 2: join the last two B-blocks.
      w = apply_reflection(w, Reflection::swap(lo - 1, lo));
      moves.push_back(Reflection::swap(offset + lo - 1, offset + lo));
    } else {
      // Step 3: unsign the two most negative entries.
      auto [i, j] = most_negative_pair(w);
      if (j == 0) throw std::logic_error("no unsigning move available");
      w = apply_reflection(w, Reflection::bar_swap(i, j));
      moves.push_back(Reflection::bar_swap(offset + i, offset + j));
    }
  }
}

Factorization build_factorization(std::vector<Reflection> reflections, const GroupContext& ctx) {
  Factorization f;
  f.reflections = std::move(reflections);
  f.trace.reserve(f.reflections.size() + 1);
  f.trace.push_back(SignedPermutation::identity(ctx.rank));
  for (const Reflection& t : f.reflections) {
    f.depth_cost += reflection_depth(t, ctx);
    f.length_cost += reflection_length(t, ctx);
    f.trace.push_back(apply_reflection(f.trace.back(), t));
  }
  return f;
}

}  // namespace

bool is_reduced_step(const SignedPermutation& w, const Reflection& t, const GroupContext& ctx) {
  if (!t.legal_in(ctx) || t.j() > w.size())
    throw std::domain_error(t.str() + " is not a reflection of the context");
  const int i = t.i(), j = t.j();
  switch (t.kind()) {
    case Reflection::Kind::Swap: {
      if (w.entry(i) <= w.entry(j)) return false;
      for (int k = i + 1; k < j; ++k)
        if (!(w.entry(i) > w.entry(k) && w.entry(k) > w.entry(j))) return false;
      return true;
    }
    case Reflection::Kind::BarFix: {
      if (w.entry(i) >= 0) return false;
      for (int k = 1; k < i; ++k)
        if (std::abs(w.entry(k)) >= std::abs(w.entry(i))) return false;
      return true;
    }
    case Reflection::Kind::BarSwap: {
      if (ctx.family == Family::B) {
        if (w.entry(i) >= 0 || w.entry(j) >= 0) return false;
        for (int k = 1; k < i; ++k)
          if (!(w.entry(k) > w.entry(i) && w.entry(k) + w.entry(j) < 0)) return false;
        for (int k = 1; k < j; ++k) {
          if (k == i) continue;
          if (!(w.entry(k) > w.entry(j) && w.entry(i) + w.entry(k) < 0)) return false;
        }
        return true;
      }
      if (w.entry(i) + w.entry(j) >= 0) return false;
      for (int k = 1; k < i; ++k)
        if (!(w.entry(k) > w.entry(i) && w.entry(k) + w.entry(j) < 0)) return false;
      for (int k = 1; k < j; ++k) {
        if (k == i) continue;
        if (!(w.entry(i) + w.entry(k) <= 0 && w.entry(k) > w.entry(j))) return false;
      }
      return true;
    }
  }
  throw std::logic_error("bad reflection kind");
}

Factorization sort_b(const SignedPermutation& w) {
  std::vector<Reflection> moves;
  BlockDecomposition dec = b_decompose(w);
  for (int b = 0; b < dec.block_count(); ++b) {
    int begin = dec.block_begin(b);
    sort_block_b(extract_block(w, begin, dec.block_end(b)), begin - 1, moves);
  }
  std::reverse(moves.begin(), moves.end());
  return build_factorization(std::move(moves), GroupContext(Family::B, w.size()));
}

Factorization sort_d(const SignedPermutation& w) {
  if (w.neg_count() % 2 != 0) throw std::domain_error("element is not in D_n");
  std::vector<Reflection> moves;
  BlockDecomposition dec = d_decompose(w);
  for (int b = 0; b < dec.block_count(); ++b) {
    int begin = dec.block_begin(b);
    sort_block_d(extract_block(w, begin, dec.block_end(b)), begin - 1, moves);
  }
  std::reverse(moves.begin(), moves.end());
  return build_factorization(std::move(moves), GroupContext(Family::D, w.size()));
}

Factorization depth_factorization(const SignedPermutation& w, const GroupContext& ctx) {
  if (!w.member_of(ctx)) throw std::domain_error("element not in the context group");
  switch (ctx.family) {
    case Family::A: {
      Factorization f = sort_b(w);
      return build_factorization(std::move(f.reflections), ctx);  // same swaps, A costs
    }
    case Family::B: return sort_b(w);
    case Family::D: return sort_d(w);
  }
  throw std::logic_error("bad family");
}

SimpleWord expand_to_word(const Factorization& f, const GroupContext& ctx) {
  SimpleWord word;
  for (const Reflection& t : f.reflections) {
    SimpleWord part = reflection_word(t, ctx);
    word.insert(word.end(), part.begin(), part.end());
  }
  return word;
}

bool CheckReport::all_ok() const {
  return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.ok; });
}

CheckReport verify(const Factorization& f, const SignedPermutation& w, const GroupContext& ctx) {
  CheckReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.items.push_back({std::move(name), ok, std::move(detail)});
  };

  bool legal = true;
  for (const Reflection& t : f.reflections)
    if (!t.legal_in(ctx) || t.j() > ctx.rank) {
      legal = false;
      add("legal", false, t.str() + " is illegal in the context");
      break;
    }
  if (legal) add("legal", true);
  if (!legal) {
    for (const char* name : {"product", "depth_cost", "length_cost", "reduced_chain"})
      add(name, false, "skipped: illegal reflection");
    return report;
  }

  SignedPermutation prod = SignedPermutation::identity(ctx.rank);
  int dp_sum = 0, len_sum = 0;
  bool chain_ok = true;
  std::string chain_detail;
  for (std::size_t k = 0; k < f.reflections.size(); ++k) {
    const Reflection& t = f.reflections[k];
    SignedPermutation next = apply_reflection(prod, t);
    int expected = length(prod, ctx).total + reflection_length(t, ctx);
    if (length(next, ctx).total != expected || !is_reduced_step(next, t, ctx)) {
      if (chain_ok)
        chain_detail = "step " + std::to_string(k + 1) + " (" + t.str() + ") is not reduced";
      chain_ok = false;
    }
    dp_sum += reflection_depth(t, ctx);
    len_sum += reflection_length(t, ctx);
    prod = next;
  }

  bool product_ok = prod == w;
  if (!f.trace.empty()) {
    product_ok = product_ok && f.trace.front().is_identity() && f.trace.back() == w &&
                 f.trace.size() == f.reflections.size() + 1;
  }
  add("product", product_ok, product_ok ? "" : "product is " + format_window(prod));

  int dp_w = depth(w, ctx).total;
  add("depth_cost", f.depth_cost == dp_sum && dp_sum == dp_w,
      f.depth_cost == dp_sum && dp_sum == dp_w
          ? ""
          : "cost " + std::to_string(dp_sum) + " vs dp(w) = " + std::to_string(dp_w));

  int ls_w = length(w, ctx).total;
  add("length_cost", f.length_cost == len_sum && len_sum == ls_w,
      f.length_cost == len_sum && len_sum == ls_w
          ? ""
          : "cost " + std::to_string(len_sum) + " vs l_S(w) = " + std::to_string(ls_w));

  add("reduced_chain", chain_ok, chain_detail);
  return report;
}

}  // namespace coxdepth
