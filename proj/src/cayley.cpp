#include "coxdepth/cayley.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

#include "coxdepth/stats.hpp"

namespace coxdepth {

std::uint64_t CayleyGraph::default_max_order() {
  if (const char* env = std::getenv("COXDEPTH_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("COXDEPTH_MAX_ORDER must be a positive integer");
  }
  return 1'000'000;
}

CayleyGraph::CayleyGraph(const GroupContext& ctx, std::uint64_t max_order) : ctx_(ctx) {
  if (ctx.order() > max_order)
    throw std::length_error("group order " + std::to_string(ctx.order()) +
                            " exceeds the vertex cap " + std::to_string(max_order));
  elements_ = all_elements(ctx, max_order);
  index_.reserve(elements_.size() * 2);
  for (std::size_t k = 0; k < elements_.size(); ++k)
    index_.emplace(window_code(elements_[k]), static_cast<std::uint32_t>(k));
  reflections_ = all_reflections(ctx);

  const std::size_t order = elements_.size();
  const std::size_t root = index_of(SignedPermutation::identity(ctx.rank));

  // Coxeter length first: plain BFS over the simple generators.
  ls_.assign(order, -1);
  ls_[root] = 0;
  std::queue<std::size_t> queue;
  queue.push(root);
  const int lo = ctx.family == Family::A ? 1 : 0;
  const int gens = ctx.generator_count();
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (int s = lo; s < lo + gens; ++s) {
      std::size_t v = index_of(apply_simple(elements_[u], s, ctx.family));
      if (ls_[v] < 0) {
        ls_[v] = ls_[u] + 1;
        queue.push(v);
      }
    }
  }

  // Edge weights from the BFS distances of the reflections themselves.
  reflection_ls_.reserve(reflections_.size());
  for (const Reflection& t : reflections_) {
    int l = ls_[index_of(t.as_permutation(ctx.rank))];
    if (l % 2 != 1) throw std::logic_error("reflection with even length");
    reflection_ls_.push_back(l);
  }

  // Reflection length: unweighted BFS over the Bruhat graph.
  lt_.assign(order, -1);
  lt_[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (const Reflection& t : reflections_) {
      std::size_t v = index_of(apply_reflection(elements_[u], t));
      if (lt_[v] < 0) {
        lt_[v] = lt_[u] + 1;
        queue.push(v);
      }
    }
  }

  // Reduced reflection length: BFS following only length-additive steps.
  lr_.assign(order, -1);
  lr_[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::size_t ti = 0; ti < reflections_.size(); ++ti) {
      std::size_t v = index_of(apply_reflection(elements_[u], reflections_[ti]));
      if (lr_[v] < 0 && ls_[v] == ls_[u] + reflection_ls_[ti]) {
        lr_[v] = lr_[u] + 1;
        queue.push(v);
      }
    }
  }

  // Depth: Dijkstra with edge weight dp(t) = (l_S(t)+1)/2.
  depth_.assign(order, -1);
  using Entry = std::pair<int, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(0, root);
  while (!heap.empty()) {
    auto [dist, u] = heap.top();
    heap.pop();
    if (depth_[u] >= 0) continue;
    depth_[u] = dist;
    for (std::size_t ti = 0; ti < reflections_.size(); ++ti) {
      std::size_t v = index_of(apply_reflection(elements_[u], reflections_[ti]));
      if (depth_[v] < 0) heap.emplace(dist + (reflection_ls_[ti] + 1) / 2, v);
    }
  }
}

std::size_t CayleyGraph::index_of(const SignedPermutation& w) const {
  auto it = index_.find(window_code(w));
  if (w.size() != ctx_.rank || it == index_.end())
    throw std::domain_error("element " + format_window(w) + " is not a vertex of the graph");
  return it->second;
}

int CayleyGraph::reflection_length_by_omission(const SignedPermutation& w) const {
  // Peel right descents (by BFS distance) to get one reduced word, stored as
  // the reflections corresponding to the letters.
  std::vector<SignedPermutation> letters;
  SignedPermutation cur = w;
  const int lo = ctx_.family == Family::A ? 1 : 0;
  while (!cur.is_identity()) {
    for (int s = lo; s < lo + ctx_.generator_count(); ++s) {
      SignedPermutation next = apply_simple(cur, s, ctx_.family);
      if (ls_[index_of(next)] < ls_[index_of(cur)]) {
        letters.push_back(apply_simple(SignedPermutation::identity(ctx_.rank), s, ctx_.family));
        cur = next;
        break;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());

  const int m = static_cast<int>(letters.size());
  for (int k = 0; k <= m; ++k) {
    // All ways to omit k letters, as bitmasks of kept positions.
    std::vector<int> omit(k);
    for (int i = 0; i < k; ++i) omit[i] = i;
    for (;;) {
      SignedPermutation prod = SignedPermutation::identity(ctx_.rank);
      int next_omit = 0;
      for (int p = 0; p < m; ++p) {
        if (next_omit < k && omit[next_omit] == p) {
          ++next_omit;
          continue;
        }
        prod = compose(prod, letters[static_cast<std::size_t>(p)]);
      }
      if (prod.is_identity()) return k;
      // next combination
      int i = k - 1;
      while (i >= 0 && omit[i] == m - k + i) --i;
      if (i < 0) break;
      ++omit[i];
      for (int q = i + 1; q < k; ++q) omit[q] = omit[q - 1] + 1;
    }
  }
  throw std::logic_error("omission search failed");
}

CayleyGraph::DeltaReport CayleyGraph::check_depth_delta() const {
  DeltaReport report;
  std::vector<int> formula(order());
  for (std::size_t k = 0; k < order(); ++k) formula[k] = coxdepth::depth(elements_[k], ctx_).total;
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::size_t ti = 0; ti < reflections_.size(); ++ti) {
      std::size_t v = index_of(apply_reflection(elements_[u], reflections_[ti]));
      int dp_t = (reflection_ls_[ti] + 1) / 2;
      ++report.pairs;
      if (formula[u] - dp_t > formula[v]) {
        ++report.violations;
        if (report.first_violation.empty())
          report.first_violation = format_window(elements_[u]) + " * " + reflections_[ti].str();
      }
    }
  }
  return report;
}

}  // namespace coxdepth
