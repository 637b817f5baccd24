#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "factor/errors.hpp"
#include "factor/vertex_set.hpp"

namespace factor {

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// VertexSet per vertex. Immutable after construction; duplicate edges in
// the input are collapsed, self-loops rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  int degree(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)].size();
  }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
  }

  // All edges as pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorKind::InvalidVertex,
                  "vertex " + std::to_string(v) + " out of range [0," +
                      std::to_string(n_) + ")");
  }

  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

enum class GraphKind { Complete, Path, Cycle, Star, Empty };

Graph standard_graph(GraphKind kind, int n);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, center 0
Graph empty_graph(int n);

// Disjoint union; vertices of b are relabeled after those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& a, const Graph& b);

struct InducedSubgraph {
  Graph graph;
  // old_label[new vertex] = original vertex; order-preserving.
  std::vector<int> old_label;
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept);

// Connected components as vertex sets, ordered by their lowest vertex.
std::vector<VertexSet> components(const Graph& g);

int isolated_count(const Graph& g);
int min_degree(const Graph& g);  // EmptyGraph on order 0
bool is_connected(const Graph& g);

// Image of g under perm: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Erdos-Renyi draw with a fixed seed; identical seeds give identical graphs.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace factor
