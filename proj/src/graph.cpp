#include "factor/graph.hpp"

#include <random>
#include <string>

namespace factor {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) throw Error(ErrorKind::InvalidOrder, "negative vertex count");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::InvalidVertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
  }
  long long deg_sum = 0;
  for (const auto& row : adj_) deg_sum += row.size();
  m_ = deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidOrder, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidOrder, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidOrder, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

Graph star_graph(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidOrder, "star needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

Graph empty_graph(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidOrder, "negative vertex count");
  return Graph(n, {});
}

Graph standard_graph(GraphKind kind, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidOrder, "standard graphs need n >= 1");
  switch (kind) {
    case GraphKind::Complete: return complete_graph(n);
    case GraphKind::Path: return path_graph(n);
    case GraphKind::Cycle: return cycle_graph(n);
    case GraphKind::Star: return star_graph(n);
    case GraphKind::Empty: return empty_graph(n);
  }
  throw Error(ErrorKind::InvalidParameters, "unknown graph kind");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + na, v + na);
  return Graph(na + b.order(), e);
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + na, v + na);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) e.emplace_back(u, na + v);
  return Graph(na + nb, e);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
  const int n = g.order();
  if (kept.universe() != n)
    throw Error(ErrorKind::InvalidVertex,
                "vertex set universe does not match the graph order");
  std::vector<int> new_of(static_cast<std::size_t>(n), -1);
  std::vector<int> old_label;
  kept.for_each([&](int v) {
    new_of[static_cast<std::size_t>(v)] = static_cast<int>(old_label.size());
    old_label.push_back(v);
  });
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) {
    int nu = new_of[static_cast<std::size_t>(u)];
    int nv = new_of[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) e.emplace_back(nu, nv);
  }
  return {Graph(static_cast<int>(old_label.size()), e), std::move(old_label)};
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order())
    throw Error(ErrorKind::InvalidVertex,
                "vertex set universe does not match the graph order");
  return induced_subgraph(g, VertexSet::full(g.order()) - removed);
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  VertexSet unseen = VertexSet::full(n);
  while (!unseen.empty()) {
    int start = unseen.first();
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.add(start);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next -= comp;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

int isolated_count(const Graph& g) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++c;
  return c;
}

int min_degree(const Graph& g) {
  if (g.order() == 0)
    throw Error(ErrorKind::EmptyGraph, "minimum degree of an order-0 graph");
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool is_connected(const Graph& g) {
  return components(g).size() <= 1;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw Error(ErrorKind::InvalidParameters, "permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    e.emplace_back(perm[static_cast<std::size_t>(u)],
                   perm[static_cast<std::size_t>(v)]);
  return Graph(g.order(), e);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidOrder, "negative vertex count");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::InvalidParameters, "edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // 53-bit uniform draw in [0,1); avoids distribution objects so the
      // stream is reproducible across standard libraries.
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

}  // namespace factor
