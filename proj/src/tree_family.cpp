#include "factor/tree_family.hpp"

#include <algorithm>
#include <string>

namespace factor {

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

namespace {

// Center vertices found by stripping leaf layers until at most two remain.
std::vector<int> tree_centers(const Graph& g) {
  const int n = g.order();
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[static_cast<std::size_t>(v)] = true;
      --remaining;
      g.neighbors(v).for_each([&](int u) {
        if (!gone[static_cast<std::size_t>(u)] &&
            --deg[static_cast<std::size_t>(u)] == 1)
          next.push_back(u);
      });
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!gone[static_cast<std::size_t>(v)]) centers.push_back(v);
  return centers;
}

std::string rooted_code(const Graph& g, int v, int parent) {
  std::vector<std::string> child_codes;
  g.neighbors(v).for_each([&](int u) {
    if (u != parent) child_codes.push_back(rooted_code(g, u, v));
  });
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

}  // namespace

std::string canonical_code(const Graph& tree) {
  if (!is_tree(tree))
    throw Error(ErrorKind::NotATree, "canonical codes are defined for trees");
  std::string best;
  for (int c : tree_centers(tree)) {
    std::string code = rooted_code(tree, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

BaseValidation validate_base(const Graph& base, int k) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  BaseValidation out;
  if (!is_tree(base)) {
    out.rejection = "not a tree";
    return out;
  }
  const int n = base.order();
  VertexSet leaves(n);
  for (int v = 0; v < n; ++v)
    if (base.degree(v) == 1) leaves.add(v);
  VertexSet kept = VertexSet::full(n) - leaves;
  if (kept.empty()) {
    out.rejection = "empty after removing leaves";
    return out;
  }
  InducedSubgraph trimmed = induced_subgraph(base, kept);
  const int q = trimmed.graph.order();
  std::vector<int> leaf_count(static_cast<std::size_t>(q), 0);
  for (int x = 0; x < q; ++x) {
    const int d = trimmed.graph.degree(x);
    const int base_vertex = trimmed.old_label[static_cast<std::size_t>(x)];
    if (d % 2 == 0 || d > 2 * k + 1) {
      out.rejection = "degree " + std::to_string(d) + " after trimming at vertex " +
                      std::to_string(base_vertex) +
                      " is not an odd number at most " + std::to_string(2 * k + 1);
      return out;
    }
    int l = 0;
    base.neighbors(base_vertex).for_each([&](int u) {
      if (leaves.contains(u)) ++l;
    });
    leaf_count[static_cast<std::size_t>(x)] = l;
    if (2 * l + d > 2 * k + 1) {
      out.rejection = "leaf budget exceeded at vertex " +
                      std::to_string(base_vertex) + ": 2*" + std::to_string(l) +
                      " + " + std::to_string(d) + " > " + std::to_string(2 * k + 1);
      return out;
    }
  }
  BaseTreeWitness w;
  w.base = base;
  w.leaf_set = leaves;
  w.trimmed = trimmed.graph;
  w.trimmed_to_base = std::move(trimmed.old_label);
  w.leaf_count = std::move(leaf_count);
  w.k = k;
  out.witness = std::move(w);
  return out;
}

Graph construct_tr(const BaseTreeWitness& witness, int k) {
  if (witness.k != k)
    throw Error(ErrorKind::InvalidParameters, "witness was validated for a different k");
  const Graph& base = witness.base;
  const Graph& trimmed = witness.trimmed;
  const int nb = base.order();
  const int q = trimmed.order();
  const auto trimmed_edges = trimmed.edges();

  std::vector<std::pair<int, int>> edges;
  // Pendant edges of the base survive unchanged.
  VertexSet trimmed_set(nb);
  for (int x = 0; x < q; ++x)
    trimmed_set.add(witness.trimmed_to_base[static_cast<std::size_t>(x)]);
  for (auto [u, v] : base.edges())
    if (!trimmed_set.contains(u) || !trimmed_set.contains(v))
      edges.emplace_back(u, v);

  // One fresh degree-2 vertex per trimmed edge.
  int next = nb;
  for (auto [x, y] : trimmed_edges) {
    const int u = witness.trimmed_to_base[static_cast<std::size_t>(x)];
    const int v = witness.trimmed_to_base[static_cast<std::size_t>(y)];
    edges.emplace_back(u, next);
    edges.emplace_back(next, v);
    ++next;
  }

  // Top up each trimmed vertex of degree 2r+1 to exactly k-r leaves.
  for (int x = 0; x < q; ++x) {
    const int d = trimmed.degree(x);
    const int r = (d - 1) / 2;
    const int add = k - r - witness.leaf_count[static_cast<std::size_t>(x)];
    const int u = witness.trimmed_to_base[static_cast<std::size_t>(x)];
    for (int i = 0; i < add; ++i) {
      edges.emplace_back(u, next);
      ++next;
    }
  }
  return Graph(next, edges);
}

bool TreeCatalog::contains(int order, const std::string& code) const {
  auto it = members_.find(order);
  return it != members_.end() && it->second.count(code) > 0;
}

const std::set<std::string>& TreeCatalog::codes_at(int order) const {
  static const std::set<std::string> kEmpty;
  auto it = members_.find(order);
  return it == members_.end() ? kEmpty : it->second;
}

const BaseTreeWitness& TreeCatalog::witness_for(const std::string& code) const {
  auto it = witnesses_.find(code);
  if (it == witnesses_.end())
    throw Error(ErrorKind::InvalidParameters, "code not present in catalog");
  return it->second;
}

int TreeCatalog::member_count() const {
  int total = 0;
  for (const auto& [order, codes] : members_) total += static_cast<int>(codes.size());
  return total;
}

void TreeCatalog::insert(int order, const std::string& code,
                         BaseTreeWitness witness) {
  members_[order].insert(code);
  witnesses_.emplace(code, std::move(witness));
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "tree needs n >= 1");
  if (static_cast<int>(seq.size()) != std::max(0, n - 2))
    throw Error(ErrorKind::InvalidParameters, "sequence length must be n-2");
  if (n == 1) return Graph(1, {});
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) {
    if (s < 0 || s >= n)
      throw Error(ErrorKind::InvalidParameters, "sequence entry out of range");
    ++deg[static_cast<std::size_t>(s)];
  }
  std::vector<std::pair<int, int>> edges;
  for (int s : seq) {
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 1) {
        edges.emplace_back(v, s);
        deg[static_cast<std::size_t>(v)] = 0;
        --deg[static_cast<std::size_t>(s)];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

namespace {

// A derived tree is determined by its trimmed tree alone: the leaf counts
// of the base are always topped up to k-r. So enumeration runs over
// candidate trimmed trees (all degrees odd, at most 2k+1), each paired
// with its minimal generating base: one pendant leaf on every degree-1
// vertex.
Graph minimal_base_for(const Graph& trimmed) {
  std::vector<std::pair<int, int>> edges = trimmed.edges();
  int next = trimmed.order();
  for (int v = 0; v < trimmed.order(); ++v) {
    if (trimmed.degree(v) == 1) {
      edges.emplace_back(v, next);
      ++next;
    }
  }
  return Graph(next, edges);
}

template <class F>
void for_each_labeled_tree(int n, F&& f) {
  if (n == 1) {
    f(Graph(1, {}));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)), 0);
  while (true) {
    f(tree_from_pruefer(seq, n));
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TreeCatalog enumerate_catalog(int k, int max_order) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (max_order < 1)
    throw Error(ErrorKind::InvalidParameters, "max_order must be at least 1");
  TreeCatalog catalog(k, max_order);
  // A trimmed tree on q vertices (q even, all degrees odd) produces a
  // member of order q(2k+3)/2.
  for (int q = 2; static_cast<long long>(q) * (2 * k + 3) <= 2LL * max_order;
       q += 2) {
    std::set<std::string> seen;
    for_each_labeled_tree(q, [&](const Graph& trimmed) {
      bool degrees_ok = true;
      for (int v = 0; v < q; ++v) {
        const int d = trimmed.degree(v);
        if (d % 2 == 0 || d > 2 * k + 1) degrees_ok = false;
      }
      if (!degrees_ok) return;
      if (!seen.insert(canonical_code(trimmed)).second) return;
      BaseValidation val = validate_base(minimal_base_for(trimmed), k);
      if (!val)
        throw Error(ErrorKind::InvalidParameters,
                    "internal: minimal base rejected: " + val.rejection);
      Graph member = construct_tr(*val.witness, k);
      catalog.insert(member.order(), canonical_code(member),
                     std::move(*val.witness));
    });
  }
  return catalog;
}

bool is_member(const Graph& tree, int k, const TreeCatalog& catalog) {
  if (catalog.k() != k)
    throw Error(ErrorKind::InvalidParameters, "catalog was built for k=" +
                                                  std::to_string(catalog.k()));
  if (tree.order() > catalog.max_order())
    throw Error(ErrorKind::CatalogTooSmall,
                "tree order " + std::to_string(tree.order()) +
                    " exceeds catalog max order " +
                    std::to_string(catalog.max_order()));
  return catalog.contains(tree.order(), canonical_code(tree));
}

}  // namespace factor
