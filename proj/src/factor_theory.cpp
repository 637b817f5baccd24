#include "factor/factor_theory.hpp"

#include <algorithm>
#include <string>

namespace factor {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw Error(ErrorKind::TooLarge, std::string(what) + ": order " +
                                         std::to_string(g.order()) +
                                         " exceeds the search cap " +
                                         std::to_string(cap));
}

int isolated_after_removing(const Graph& g, const VertexSet& s) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!s.contains(v) && g.neighbors(v).is_subset_of(s)) ++count;
  return count;
}

struct DeficiencySearch {
  const Graph& g;
  int weight;  // 2k+1
  long long best_value;
  VertexSet best_set;
  int best_isolated;

  void consider(const VertexSet& s) {
    const int iso = isolated_after_removing(g, s);
    const long long value = 2LL * iso - static_cast<long long>(weight) * s.size();
    if (value > best_value ||
        (value == best_value && VertexSet::value_less(s, best_set))) {
      best_value = value;
      best_set = s;
      best_isolated = iso;
    }
  }

  // Extends the independent set I (all members below `from` were decided)
  // whose neighborhood is s. Only subtrees that cannot reach best_value
  // are cut, so value ties are still resolved toward the numerically
  // smallest maximizer.
  void extend(int from, const VertexSet& s) {
    const long long n2 = 2LL * g.order();
    for (int v = from; v < g.order(); ++v) {
      if (g.degree(v) == 0) continue;  // always isolated, never helps S
      if (s.contains(v)) continue;     // adjacent to the current set
      VertexSet next = s | g.neighbors(v);
      if (n2 - static_cast<long long>(weight + 2) * next.size() < best_value)
        continue;
      consider(next);
      extend(v + 1, next);
    }
  }
};

}  // namespace

DeficiencyReport deficiency(const Graph& g, int k, int cap) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  check_cap(g, cap, "deficiency");
  DeficiencySearch search{g, 2 * k + 1, -1, VertexSet(g.order()), 0};
  search.consider(VertexSet(g.order()));
  search.extend(0, VertexSet(g.order()));
  DeficiencyReport report;
  report.k = k;
  report.best_set = search.best_set;
  report.isolated = search.best_isolated;
  report.value = search.best_value;
  return report;
}

bool has_factor_thm11(const Graph& g, int k, int cap) {
  return deficiency(g, k, cap).value == 0;
}

ConditionVerdict check_thm11(const Graph& g, int k, int cap) {
  DeficiencyReport report = deficiency(g, k, cap);
  ConditionVerdict v;
  v.condition = Condition::T11;
  v.applicable = true;
  v.holds = report.value == 0;
  v.witness = ViolatingSetWitness{report.best_set, report.isolated, report.value};
  return v;
}

namespace {

struct AlphaSearch {
  const Graph& g;
  int best = 0;

  void run(const VertexSet& remaining, int chosen) {
    if (chosen + remaining.size() <= best) return;
    if (remaining.empty()) {
      best = std::max(best, chosen);
      return;
    }
    // Branch on a maximum-degree vertex of the remaining subgraph.
    int pivot = -1, pivot_deg = -1;
    remaining.for_each([&](int v) {
      const int d = (g.neighbors(v) & remaining).size();
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    });
    VertexSet with = remaining - g.neighbors(pivot);
    with.remove(pivot);
    run(with, chosen + 1);
    VertexSet without = remaining;
    without.remove(pivot);
    run(without, chosen);
  }
};

}  // namespace

int independence_number(const Graph& g, int cap) {
  check_cap(g, cap, "independence number");
  AlphaSearch search{g};
  search.run(VertexSet::full(g.order()), 0);
  return search.best;
}

void for_each_independent_set_of_size(
    const Graph& g, int size, const std::function<bool(const VertexSet&)>& fn,
    int cap) {
  check_cap(g, cap, "independent set enumeration");
  if (size < 0) throw Error(ErrorKind::InvalidParameters, "negative set size");
  const int n = g.order();
  VertexSet current(n);
  bool stop = false;
  auto rec = [&](auto&& self, int from, int picked) -> void {
    if (stop) return;
    if (picked == size) {
      if (!fn(current)) stop = true;
      return;
    }
    if (n - from < size - picked) return;
    for (int v = from; v < n && !stop; ++v) {
      if (g.neighbors(v).intersects(current)) continue;
      current.add(v);
      self(self, v + 1, picked + 1);
      current.remove(v);
    }
  };
  rec(rec, 0, 0);
}

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int size,
                                                int cap) {
  std::vector<VertexSet> out;
  for_each_independent_set_of_size(
      g, size,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

namespace {

bool connected_after_removing(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  VertexSet alive = VertexSet::full(n) - removed;
  const int target = alive.size();
  if (target == 0) return true;
  VertexSet comp(n);
  VertexSet frontier(n);
  frontier.add(alive.first());
  while (!frontier.empty()) {
    comp |= frontier;
    VertexSet next(n);
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next &= alive;
    next -= comp;
    frontier = next;
  }
  return comp.size() == target;
}

}  // namespace

bool is_t_connected(const Graph& g, int t, int cap) {
  if (t < 0) throw Error(ErrorKind::InvalidParameters, "t must be nonnegative");
  check_cap(g, cap, "connectivity");
  const int n = g.order();
  if (n < t + 1) return false;
  if (t == 0) return true;
  // Every removal of fewer than t vertices must leave a connected graph.
  VertexSet removed(n);
  auto rec = [&](auto&& self, int from, int left) -> bool {
    if (!connected_after_removing(g, removed)) return false;
    if (left == 0) return true;
    for (int v = from; v < n; ++v) {
      removed.add(v);
      const bool ok = self(self, v + 1, left - 1);
      removed.remove(v);
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, t - 1);
}

long long extremal_edge_threshold(long long n, int k, int t) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (t < 0) throw Error(ErrorKind::InvalidParameters, "t must be nonnegative");
  const long long fl = (2LL * k + 1) * t / 2;
  const long long rest = n - fl - 1;
  if (rest < 0)
    throw Error(ErrorKind::InvalidParameters,
                "n too small: binomial argument would be negative");
  return rest * (rest - 1) / 2 + static_cast<long long>(t) * (fl + 1);
}

ConditionVerdict check_thm13(const Graph& g, int k, int t, int cap) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (t < 1 || t > k - 1)
    return not_applicable(Condition::T13, "t must satisfy 1 <= t <= k-1");
  const long long n = g.order();
  // Order bound with the denominator cleared: 2kn >= (2k^2+5k+1)t + k^2+5k+2.
  const long long lhs = 2LL * k * n;
  const long long rhs = (2LL * k * k + 5 * k + 1) * t +
                        (static_cast<long long>(k) * k + 5 * k + 2);
  if (lhs < rhs)
    return not_applicable(Condition::T13,
                          "order below the bound ((2k^2+5k+1)t + k^2+5k+2)/(2k)");
  if (!is_t_connected(g, t, cap))
    return not_applicable(Condition::T13,
                          "graph is not " + std::to_string(t) + "-connected");
  ConditionVerdict v;
  v.condition = Condition::T13;
  v.applicable = true;
  const long long threshold = extremal_edge_threshold(n, k, t);
  v.holds = g.edge_count() > threshold;
  v.witness = EdgeCountWitness{g.edge_count(), threshold, t};
  return v;
}

ConditionVerdict check_thm14(const Graph& g, int k, int cap) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (g.order() == 0)
    return not_applicable(Condition::T14, "minimum degree undefined on order 0");
  check_cap(g, cap, "condition 14");
  const int delta = min_degree(g);
  if (delta < 1)
    return not_applicable(Condition::T14, "minimum degree must be at least 1");
  const int n = g.order();
  const int set_size = static_cast<int>((2LL * k + 1) * delta / 2 + 1);
  // The condition fails exactly when some independent set of that size
  // lies entirely among vertices of degree < 2n/(2k+3).
  VertexSet low_degree(n);
  for (int v = 0; v < n; ++v)
    if (static_cast<long long>(2 * k + 3) * g.degree(v) < 2LL * n)
      low_degree.add(v);
  InducedSubgraph low = induced_subgraph(g, low_degree);

  ConditionVerdict verdict;
  verdict.condition = Condition::T14;
  verdict.applicable = true;
  verdict.holds = true;
  for_each_independent_set_of_size(
      low.graph, set_size,
      [&](const VertexSet& s) {
        VertexSet original(n);
        std::vector<int> degrees;
        s.for_each([&](int v) {
          const int w = low.old_label[static_cast<std::size_t>(v)];
          original.add(w);
          degrees.push_back(g.degree(w));
        });
        verdict.holds = false;
        verdict.witness = IndependentSetWitness{original, std::move(degrees)};
        return false;  // first violating set is enough
      },
      cap);
  return verdict;
}

ConditionVerdict check_thm15(const Graph& g, int k, int cap) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (g.order() == 0)
    return not_applicable(Condition::T15, "minimum degree undefined on order 0");
  check_cap(g, cap, "condition 15");
  const int delta = min_degree(g);
  const int alpha = independence_number(g, cap);
  ConditionVerdict v;
  v.condition = Condition::T15;
  v.applicable = true;
  v.holds = static_cast<long long>(2 * k + 1) * delta >= 2LL * alpha;
  v.witness = DegreeAlphaWitness{delta, alpha};
  return v;
}

}  // namespace factor
