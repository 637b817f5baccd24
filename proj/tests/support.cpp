#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "factor/graph6.hpp"
#include "factor/tree_family.hpp"

namespace factor::testing {

std::vector<std::string> corpus_lines(int max_order) {
  std::vector<std::string> all =
      read_graph6_lines(std::string(FACTOR_DATA_DIR) + "/connected_le8.g6");
  std::vector<std::string> out;
  for (auto& line : all)
    if (static_cast<unsigned char>(line[0]) - 63 <= max_order)
      out.push_back(std::move(line));
  return out;
}

std::vector<Graph> corpus_graphs(int max_order) {
  std::vector<Graph> out;
  for (const auto& line : corpus_lines(max_order))
    out.push_back(parse_graph6(line));
  return out;
}

DeficiencyReport brute_deficiency(const Graph& g, int k) {
  const int n = g.order();
  DeficiencyReport best;
  best.k = k;
  best.value = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.add(v);
    int iso = 0;
    for (int v = 0; v < n; ++v)
      if (!s.contains(v) && g.neighbors(v).is_subset_of(s)) ++iso;
    const long long value = 2LL * iso - static_cast<long long>(2 * k + 1) * s.size();
    if (value > best.value) {  // masks ascend numerically, first max is smallest
      best.value = value;
      best.best_set = s;
      best.isolated = iso;
    }
  }
  return best;
}

int brute_alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v) {
      if (!(mask >> v & 1)) continue;
      g.neighbors(v).for_each([&](int u) {
        if (u > v && (mask >> u & 1)) independent = false;
      });
    }
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

namespace {

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

}  // namespace

std::vector<double> complete_spectrum(int n) {
  std::vector<double> v(static_cast<std::size_t>(n), static_cast<double>(n));
  v.back() = 0.0;
  return v;
}

std::vector<double> cycle_spectrum(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j)
    v.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * j / n));
  return sorted_desc(v);
}

std::vector<double> path_spectrum(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j)
    v.push_back(2.0 - 2.0 * std::cos(std::numbers::pi * j / n));
  return sorted_desc(v);
}

std::vector<double> star_spectrum(int n) {
  std::vector<double> v(static_cast<std::size_t>(n), 1.0);
  v.front() = static_cast<double>(n);
  v.back() = 0.0;
  if (n == 1) v.front() = 0.0;
  return v;
}

bool looks_like_family_member(const Graph& tree, int k) {
  if (!is_tree(tree)) return false;
  const int n = tree.order();
  VertexSet leaves(n);
  for (int v = 0; v < n; ++v)
    if (tree.degree(v) == 1) leaves.add(v);
  VertexSet core_set = VertexSet::full(n) - leaves;
  if (core_set.empty()) return false;
  InducedSubgraph core = induced_subgraph(tree, core_set);
  const Graph& t = core.graph;
  const int q = t.order();

  // Odd-degree vertices form the skeleton; degree-2 vertices must be the
  // connectors sitting on skeleton edges.
  std::vector<bool> is_skeleton(static_cast<std::size_t>(q), false);
  std::vector<int> skeleton;
  for (int v = 0; v < q; ++v) {
    const int d = t.degree(v);
    if (d % 2 == 1) {
      is_skeleton[static_cast<std::size_t>(v)] = true;
      skeleton.push_back(v);
    } else if (d != 2) {
      return false;
    }
  }

  std::vector<std::pair<int, int>> contracted_edges;
  for (int v = 0; v < q; ++v) {
    if (is_skeleton[static_cast<std::size_t>(v)]) continue;
    // Connector: exactly two neighbors, both skeleton, and no leaf of the
    // original tree hangs off it.
    const int original = core.old_label[static_cast<std::size_t>(v)];
    if (tree.degree(original) != 2) return false;
    std::vector<int> nb = t.neighbors(v).to_vector();
    if (nb.size() != 2) return false;
    for (int u : nb)
      if (!is_skeleton[static_cast<std::size_t>(u)]) return false;
    contracted_edges.emplace_back(nb[0], nb[1]);
  }

  // Every skeleton edge must have been split by a connector.
  for (int v : skeleton) {
    bool ok = true;
    t.neighbors(v).for_each([&](int u) {
      if (is_skeleton[static_cast<std::size_t>(u)]) ok = false;
    });
    if (!ok) return false;
  }

  // Contracting the connectors must give a tree on the skeleton.
  if (skeleton.size() < 2) return false;
  if (contracted_edges.size() != skeleton.size() - 1) return false;
  {
    std::vector<int> index(static_cast<std::size_t>(q), -1);
    for (std::size_t i = 0; i < skeleton.size(); ++i)
      index[static_cast<std::size_t>(skeleton[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [a, b] : contracted_edges)
      relabeled.emplace_back(index[static_cast<std::size_t>(a)],
                             index[static_cast<std::size_t>(b)]);
    if (!is_tree(Graph(static_cast<int>(skeleton.size()), relabeled))) return false;
  }

  // Leaf top-up counts: a skeleton vertex of contracted degree 2r+1 must
  // carry exactly k-r leaves.
  for (int v : skeleton) {
    const int d = t.degree(v);
    if (d > 2 * k + 1) return false;
    const int r = (d - 1) / 2;
    const int original = core.old_label[static_cast<std::size_t>(v)];
    int leaf_neighbors = 0;
    tree.neighbors(original).for_each([&](int u) {
      if (leaves.contains(u)) ++leaf_neighbors;
    });
    if (leaf_neighbors != k - r) return false;
  }
  return true;
}

bool identical(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edges() == b.edges();
}

}  // namespace factor::testing
