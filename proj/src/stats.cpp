#include "coxdepth/stats.hpp"

#include <cstdlib>
#include <stdexcept>

#include "coxdepth/blocks.hpp"

namespace coxdepth {

namespace {

void require_member(const SignedPermutation& w, const GroupContext& ctx) {
  if (!w.member_of(ctx))
    throw std::domain_error("element " + format_window(w) + " is not in " +
                            family_letter(ctx.family) + std::string("_") + std::to_string(ctx.rank));
}

}  // namespace

LengthBreakdown length(const SignedPermutation& w, const GroupContext& ctx) {
  require_member(w, ctx);
  const int n = w.size();
  LengthBreakdown b{0, 0, 0, 0};
  for (int i = 1; i <= n; ++i) {
    if (w.entry(i) < 0) ++b.neg;
    for (int j = i + 1; j <= n; ++j) {
      if (w.entry(i) > w.entry(j)) ++b.inv;
      if (w.entry(i) + w.entry(j) < 0) ++b.nsp;
    }
  }
  switch (ctx.family) {
    case Family::A: b.total = b.inv; break;
    case Family::B: b.total = b.inv + b.neg + b.nsp; break;
    case Family::D: b.total = b.inv + b.nsp; break;
  }
  return b;
}

int reflection_depth(const Reflection& t, const GroupContext& ctx) {
  if (!t.legal_in(ctx)) throw std::domain_error(t.str() + " is not a reflection of the context");
  switch (t.kind()) {
    case Reflection::Kind::Swap: return t.j() - t.i();
    case Reflection::Kind::BarSwap:
      return ctx.family == Family::B ? t.i() + t.j() - 1 : t.i() + t.j() - 2;
    case Reflection::Kind::BarFix: return t.i();
  }
  throw std::logic_error("bad reflection kind");
}

int reflection_length(const Reflection& t, const GroupContext& ctx) {
  return 2 * reflection_depth(t, ctx) - 1;
}

DepthBreakdown depth(const SignedPermutation& w, const GroupContext& ctx) {
  require_member(w, ctx);
  DepthBreakdown d{0, 0, 0, 0, 0};
  for (int i = 1; i <= w.size(); ++i) {
    int x = w.entry(i);
    if (x > i) d.exceedance_sum += x - i;
    if (x < 0) d.neg_abs_sum += -x;
  }
  const int neg = w.neg_count();
  switch (ctx.family) {
    case Family::A:
      d.correction = 0;
      break;
    case Family::B: {
      d.oddness = oddness_b(w);
      if ((d.oddness - neg) % 2 != 0)
        throw std::logic_error("o^B and neg have different parities");
      d.correction = (d.oddness - neg) / 2;
      break;
    }
    case Family::D: {
      d.oddness = oddness_d(w);
      d.correction = d.oddness - neg;
      break;
    }
  }
  d.total = d.exceedance_sum + d.neg_abs_sum + d.correction;
  return d;
}

int depth_alt(const SignedPermutation& w, const GroupContext& ctx) {
  if (ctx.family == Family::A) throw std::domain_error("depth_alt applies to families B and D");
  require_member(w, ctx);
  const int n = w.size();
  int full_sum = 0;  // exceedances over [-n,n] \ {0}, using w(-i) = -w(i)
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    if (w(i) > i) full_sum += w(i) - i;
  }
  const int neg = w.neg_count();
  if (ctx.family == Family::B) {
    int numerator = full_sum + oddness_b(w) - neg;
    if (numerator % 2 != 0) throw std::logic_error("type B alternate depth is not integral");
    return numerator / 2;
  }
  int numerator = full_sum - 2 * neg;
  if (numerator % 2 != 0) throw std::logic_error("type D alternate depth is not integral");
  return numerator / 2 + oddness_d(w);
}

MaxDepthProfile max_depth_profile(const GroupContext& ctx) {
  const int n = ctx.rank;
  switch (ctx.family) {
    case Family::A:
      throw std::domain_error("max_depth_profile covers families B and D");
    case Family::B:
      return {n * (n + 1) / 2, 1};
    case Family::D: {
      if (n < 2) throw std::domain_error("type D profile requires rank >= 2");
      int max = n * (n - 1) / 2 + n / 2;
      std::uint64_t count = n % 2 == 0 ? std::uint64_t{1} << ((n - 2) / 2)
                                       : std::uint64_t{1} << ((n + 1) / 2);
      return {max, count};
    }
  }
  throw std::logic_error("bad family");
}

}  // namespace coxdepth
