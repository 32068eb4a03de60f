#include "coxdepth/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "coxdepth/blocks.hpp"
#include "coxdepth/classify.hpp"
#include "coxdepth/counting.hpp"
#include "coxdepth/factorize.hpp"
#include "coxdepth/stats.hpp"

namespace coxdepth {

namespace {

// Collects per-element failures from worker threads.
class FailureSink {
 public:
  void report(const std::string& detail) {
    ++count_;
    std::lock_guard lock(mutex_);
    if (first_.empty()) first_ = detail;
  }
  bool ok() const { return count_ == 0; }
  std::string detail() const {
    std::lock_guard lock(mutex_);
    return first_.empty() ? std::string{}
                          : first_ + " (" + std::to_string(count_.load()) + " failures)";
  }

 private:
  std::atomic<std::uint64_t> count_{0};
  mutable std::mutex mutex_;
  std::string first_;
};

void parallel_chunks(std::size_t count, int jobs,
                     const std::function<void(std::size_t, std::size_t)>& run) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, 64));
  if (jobs == 1 || count < 256) {
    run(0, count);
    return;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (count + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
  for (std::size_t begin = 0; begin < count; begin += chunk)
    workers.emplace_back(run, begin, std::min(count, begin + chunk));
  for (auto& worker : workers) worker.join();
}

// Counts reduced words of w, and reduced words with pairwise distinct
// letters, by peeling right descents.  Used for the all-or-none property
// behind the single-word boolean criterion.
struct WordCounter {
  const GroupContext& ctx;
  std::unordered_map<std::uint64_t, std::uint64_t> total;

  std::uint64_t count_all(const SignedPermutation& w) {
    if (w.is_identity()) return 1;
    auto it = total.find(window_code(w));
    if (it != total.end()) return it->second;
    std::uint64_t sum = 0;
    const int lo = ctx.family == Family::A ? 1 : 0;
    for (int s = lo; s < lo + ctx.generator_count(); ++s)
      if (is_right_descent(w, s, ctx.family)) sum += count_all(apply_simple(w, s, ctx.family));
    total.emplace(window_code(w), sum);
    return sum;
  }

  std::uint64_t count_distinct(const SignedPermutation& w, unsigned used) {
    if (w.is_identity()) return 1;
    std::uint64_t sum = 0;
    const int lo = ctx.family == Family::A ? 1 : 0;
    for (int s = lo; s < lo + ctx.generator_count(); ++s) {
      if (used & (1u << s)) continue;
      if (is_right_descent(w, s, ctx.family))
        sum += count_distinct(apply_simple(w, s, ctx.family), used | (1u << s));
    }
    return sum;
  }
};

struct RankSuite {
  GroupContext ctx;
  const CayleyGraph& graph;
  int jobs;
  std::vector<VerificationResult>& results;
  std::vector<int> formula_depth;
  std::vector<int> formula_length;

  RankSuite(const GroupContext& c, const CayleyGraph& g, int j,
            std::vector<VerificationResult>& out)
      : ctx(c), graph(g), jobs(j), results(out) {
    formula_depth.reserve(graph.order());
    formula_length.reserve(graph.order());
    for (std::size_t k = 0; k < graph.order(); ++k) {
      formula_depth.push_back(depth(graph.element(k), ctx).total);
      formula_length.push_back(length(graph.element(k), ctx).total);
    }
  }

  std::string tag(const char* name) const {
    return std::string(1, family_letter(ctx.family)) + std::to_string(ctx.rank) + ":" + name;
  }

  void add(const char* name, bool ok, const std::string& detail = {}) {
    results.push_back({tag(name), ok, ok ? std::string{} : detail});
  }

  // Runs `check` on every element; failures are reported per window.
  void per_element(const char* name,
                   const std::function<bool(std::size_t, const SignedPermutation&)>& check) {
    FailureSink sink;
    parallel_chunks(graph.order(), jobs, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k)
        if (!check(k, graph.element(k))) sink.report(format_window(graph.element(k)));
    });
    add(name, sink.ok(), sink.detail());
  }

  void run();
};

void RankSuite::run() {
  add("group_order", graph.order() == ctx.order(),
      "enumerated " + std::to_string(graph.order()));

  per_element("depth_formula_vs_graph", [&](std::size_t k, const SignedPermutation&) {
    return formula_depth[k] == graph.depth_table()[k];
  });

  per_element("length_formula_vs_graph", [&](std::size_t k, const SignedPermutation&) {
    return formula_length[k] == graph.coxeter_length_table()[k];
  });

  per_element("statistic_chain", [&](std::size_t k, const SignedPermutation&) {
    int lt = graph.reflection_length_table()[k];
    int dp = formula_depth[k], ls = formula_length[k];
    return lt <= ls && lt + ls <= 2 * dp && dp <= ls;
  });

  per_element("depth_from_reduced_reflection_length", [&](std::size_t k, const SignedPermutation&) {
    return 2 * formula_depth[k] == graph.reduced_reflection_length_table()[k] + formula_length[k];
  });

  per_element("factorization", [&](std::size_t k, const SignedPermutation& w) {
    Factorization f = depth_factorization(w, ctx);
    if (!verify(f, w, ctx).all_ok()) return false;
    SimpleWord word = expand_to_word(f, ctx);
    if (static_cast<int>(word.size()) != formula_length[k]) return false;
    if (!(evaluate_word(word, ctx) == w)) return false;
    for (std::size_t step = 0; step < f.reflections.size(); ++step) {
      int drop = depth(f.trace[step + 1], ctx).total - depth(f.trace[step], ctx).total;
      if (drop != reflection_depth(f.reflections[step], ctx)) return false;
    }
    return true;
  });

  {
    FailureSink sink;
    parallel_chunks(graph.order(), jobs, [&](std::size_t lo, std::size_t hi) {
      ShortBraidSearch search(ctx);  // memo is thread-confined
      for (std::size_t k = lo; k < hi; ++k) {
        const SignedPermutation& w = graph.element(k);
        bool dp_eq_ls = formula_depth[k] == formula_length[k];
        bool lt_eq_ls = graph.reflection_length_table()[k] == formula_length[k];
        bool ok = search.is_short_braid_avoiding(w) == dp_eq_ls &&
                  is_boolean(w, ctx) == lt_eq_ls &&
                  (lt_eq_ls ? dp_eq_ls : true);
        if (ctx.family == Family::B)
          ok = ok && avoids_all(w, b_depth_eq_length_patterns()) == dp_eq_ls &&
               avoids_all(w, b_boolean_patterns()) == lt_eq_ls;
        if (ctx.family == Family::D)
          ok = ok && avoids_all(w, d_depth_eq_length_patterns()) == dp_eq_ls &&
               avoids_all(w, d_boolean_patterns()) == lt_eq_ls;
        if (!ok) sink.report(format_window(w));
      }
    });
    add("classification_equivalences", sink.ok(), sink.detail());
  }

  {
    bool ok = true;
    std::string detail;
    for (const Reflection& t : graph.reflections()) {
      SignedPermutation elem = t.as_permutation(ctx.rank);
      SimpleWord word = reflection_word(t, ctx);
      if (!(evaluate_word(word, ctx) == elem) ||
          static_cast<int>(word.size()) != reflection_length(t, ctx) ||
          graph.depth(elem) != reflection_depth(t, ctx) ||
          graph.coxeter_length(elem) != reflection_length(t, ctx) ||
          !(apply_reflection(apply_reflection(elem, t), t) == elem)) {
        ok = false;
        detail = t.str();
        break;
      }
    }
    add("reflection_properties", ok, detail);
  }

  per_element("blocks", [&](std::size_t, const SignedPermutation& w) {
    BlockDecomposition dec = b_decompose(w);
    SignedPermutation sum = extract_block(w, dec.block_begin(0), dec.block_end(0));
    for (int b = 1; b < dec.block_count(); ++b)
      sum = direct_sum(sum, extract_block(w, dec.block_begin(b), dec.block_end(b)));
    if (!(sum == w)) return false;
    if (ctx.family == Family::D) {
      if (2 * oddness_d(w) < oddness_b(w)) return false;
      // Within a D-block, the first and last B-sub-blocks are odd and the
      // interior ones even, whenever the D-block is B-decomposable.
      BlockDecomposition d = d_decompose(w);
      std::size_t bi = 0;
      for (int di = 0; di < d.block_count(); ++di) {
        std::vector<bool> parities;
        while (bi < dec.cuts.size() &&
               dec.cuts[bi] <= d.cuts[static_cast<std::size_t>(di)])
          parities.push_back(dec.odd_block[bi++]);
        if (parities.size() > 1) {
          if (!parities.front() || !parities.back()) return false;
          for (std::size_t m = 1; m + 1 < parities.size(); ++m)
            if (parities[m]) return false;
        } else if (parities.size() == 1 && parities.front()) {
          return false;  // a lone B-block in D_n has even sign count
        }
      }
    }
    return true;
  });

  per_element("depth_symmetries", [&](std::size_t k, const SignedPermutation& w) {
    if (depth(w.inverse(), ctx).total != formula_depth[k]) return false;
    if (ctx.family != Family::A && depth_alt(w, ctx) != formula_depth[k]) return false;
    return true;
  });

  if (ctx.family != Family::A && !(ctx.family == Family::D && ctx.rank < 2)) {
    MaxDepthProfile profile = max_depth_profile(ctx);
    std::uint64_t achievers = 0;
    int max_seen = 0;
    for (std::size_t k = 0; k < graph.order(); ++k) max_seen = std::max(max_seen, formula_depth[k]);
    for (std::size_t k = 0; k < graph.order(); ++k)
      if (formula_depth[k] == max_seen) ++achievers;
    add("max_depth_profile", max_seen == profile.max_depth && achievers == profile.achievers,
        "max " + std::to_string(max_seen) + " with " + std::to_string(achievers) + " achievers");
  }

  if (ctx.family != Family::A) {
    bool ok = true;
    std::string detail;
    std::uint64_t dp_eq_ls = 0, boolean_total = 0;
    std::map<int, std::uint64_t> by_length;
    for (std::size_t k = 0; k < graph.order(); ++k) {
      if (formula_depth[k] == formula_length[k]) ++dp_eq_ls;
      if (graph.reflection_length_table()[k] == formula_length[k] &&
          formula_depth[k] == formula_length[k]) {
        ++boolean_total;
        ++by_length[formula_length[k]];
      }
    }
    if (!(ctx.family == Family::D && ctx.rank < 2) &&
        dp_eq_ls != closed_form_depth_eq_length(ctx)) {
      ok = false;
      detail = "dp=ls count " + std::to_string(dp_eq_ls);
    }
    if (ctx.family == Family::B && boolean_total != closed_form_boolean(ctx)) {
      ok = false;
      detail = "boolean count " + std::to_string(boolean_total);
    }
    if (ctx.family == Family::D && ctx.rank >= 4 && boolean_total != closed_form_boolean(ctx)) {
      ok = false;
      detail = "boolean count " + std::to_string(boolean_total);
    }
    int max_ls = 0;
    for (int l : formula_length) max_ls = std::max(max_ls, l);
    std::uint64_t closed_sum = 0;
    for (int k = 0; k <= max_ls && ok; ++k) {
      std::uint64_t enumerated = by_length.count(k) ? by_length[k] : 0;
      std::uint64_t closed = closed_form_boolean_by_length(ctx, k);
      closed_sum += closed;
      if (enumerated != closed) {
        ok = false;
        detail = "boolean count at length " + std::to_string(k);
      }
    }
    if (ok && closed_sum != boolean_total) {
      ok = false;
      detail = "by-length counts do not sum to the total";
    }
    add("enumeration_identities", ok, detail);
  }

  {
    CayleyGraph::DeltaReport delta = graph.check_depth_delta();
    add("depth_delta_lemma", delta.violations == 0,
        std::to_string(delta.violations) + " violations, first at " + delta.first_violation);
  }

  if (ctx.family == Family::B && ctx.rank == 3) {
    FailureSink sink;
    for (std::size_t k = 0; k < graph.order(); ++k)
      if (graph.reflection_length_by_omission(graph.element(k)) !=
          graph.reflection_length_table()[k])
        sink.report(format_window(graph.element(k)));
    add("dyer_omission_cross_check", sink.ok(), sink.detail());
  }

  if (ctx.rank <= 4) {
    FailureSink sink;
    WordCounter counter{ctx, {}};
    for (std::size_t k = 0; k < graph.order(); ++k) {
      const SignedPermutation& w = graph.element(k);
      std::uint64_t distinct = counter.count_distinct(w, 0u);
      if (distinct != 0 && distinct != counter.count_all(w)) sink.report(format_window(w));
    }
    add("boolean_word_all_or_none", sink.ok(), sink.detail());
  }

  per_element("parse_format_roundtrip", [&](std::size_t, const SignedPermutation& w) {
    return parse_window(format_window(w), ctx) == w;
  });

  {
    std::vector<SignedPermutation> shallow = shallow_elements(graph);
    bool ok = std::binary_search(shallow.begin(), shallow.end(),
                                 SignedPermutation::identity(ctx.rank));
    for (const Reflection& t : graph.reflections())
      ok = ok && std::binary_search(shallow.begin(), shallow.end(), t.as_permutation(ctx.rank));
    add("shallow_contains_reflections", ok);
  }
}

}  // namespace

std::vector<VerificationResult> run_verification(Family family, int max_n, int jobs,
                                                 std::uint64_t max_order) {
  std::vector<VerificationResult> results;
  const int min_n = family == Family::D ? 2 : 1;
  for (int n = min_n; n <= max_n; ++n) {
    GroupContext ctx(family, n);
    CayleyGraph graph(ctx, max_order);
    RankSuite suite(ctx, graph, jobs, results);
    suite.run();
  }
  return results;
}

bool all_passed(const std::vector<VerificationResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const VerificationResult& r) { return r.ok; });
}

}  // namespace coxdepth
