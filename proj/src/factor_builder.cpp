#include "factor/factor_builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace factor {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw Error(ErrorKind::TooLarge, std::string(what) + ": order " +
                                         std::to_string(g.order()) +
                                         " exceeds the search cap " +
                                         std::to_string(cap));
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v)
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

bool edges_connect(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return true;
  Dsu dsu(n);
  for (auto [u, v] : edges) dsu.unite(u, v);
  const int root = dsu.find(0);
  for (int v = 1; v < n; ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

struct SpanningTreeEnum {
  int n;
  const std::vector<std::pair<int, int>>& edges;
  const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn;
  std::vector<std::pair<int, int>> chosen;
  bool stop = false;

  void rec(std::size_t idx, const Dsu& dsu) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (!fn(chosen)) stop = true;
      return;
    }
    if (idx == edges.size()) return;
    if (chosen.size() + (edges.size() - idx) < static_cast<std::size_t>(n - 1))
      return;

    auto [u, v] = edges[idx];
    Dsu copy = dsu;
    if (copy.find(u) != copy.find(v)) {
      copy.unite(u, v);
      chosen.push_back(edges[idx]);
      rec(idx + 1, copy);
      chosen.pop_back();
    }
    if (stop) return;
    // Excluding this edge only makes sense if the rest still spans.
    std::vector<std::pair<int, int>> rest = chosen;
    rest.insert(rest.end(), edges.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                edges.end());
    if (edges_connect(n, rest)) rec(idx + 1, dsu);
  }
};

}  // namespace

void for_each_spanning_tree(
    const Graph& g,
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn,
    int cap) {
  check_cap(g, cap, "spanning tree enumeration");
  if (g.order() == 0 || !is_connected(g))
    throw Error(ErrorKind::NotConnected,
                "spanning trees require a connected nonempty graph");
  const auto edges = g.edges();
  SpanningTreeEnum e{g.order(), edges, fn, {}, false};
  e.rec(0, Dsu(g.order()));
}

std::vector<std::vector<std::pair<int, int>>> spanning_trees(const Graph& g,
                                                             int cap) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for_each_spanning_tree(
      g,
      [&](const std::vector<std::pair<int, int>>& t) {
        out.push_back(t);
        return true;
      },
      cap);
  return out;
}

namespace {

struct FactorSearch {
  const Graph& g;
  int k;
  const TreeCatalog& catalog;
  std::vector<int> sizes;  // ascending; star sizes then catalog orders
  std::vector<FactorBlock> blocks;

  // Star feasibility: some vertex adjacent to all others in the block.
  std::optional<FactorBlock> try_star(const std::vector<int>& members) const {
    VertexSet set(g.order());
    for (int v : members) set.add(v);
    for (int c : members) {
      VertexSet rest = set;
      rest.remove(c);
      if (rest.is_subset_of(g.neighbors(c))) {
        FactorBlock b;
        b.kind = FactorBlock::Kind::Star;
        b.star_leaves = static_cast<int>(members.size()) - 1;
        b.vertices = set;
        rest.for_each([&](int u) { b.edges.emplace_back(c, u); });
        return b;
      }
    }
    return std::nullopt;
  }

  // Family feasibility: the first spanning tree of the induced block whose
  // canonical code is in the catalog at this order.
  std::optional<FactorBlock> try_family(const std::vector<int>& members) const {
    VertexSet set(g.order());
    for (int v : members) set.add(v);
    InducedSubgraph block = induced_subgraph(g, set);
    if (!is_connected(block.graph)) return std::nullopt;
    const auto& codes = catalog.codes_at(block.graph.order());
    std::optional<FactorBlock> found;
    for_each_spanning_tree(block.graph, [&](const std::vector<std::pair<int, int>>& t) {
      Graph tree(block.graph.order(), t);
      const std::string code = canonical_code(tree);
      if (codes.count(code) == 0) return true;
      FactorBlock b;
      b.kind = FactorBlock::Kind::FamilyMember;
      b.family_code = code;
      b.vertices = set;
      for (auto [u, v] : t)
        b.edges.emplace_back(block.old_label[static_cast<std::size_t>(u)],
                             block.old_label[static_cast<std::size_t>(v)]);
      found = std::move(b);
      return false;
    });
    return found;
  }

  bool viable_rest(const VertexSet& rest) const {
    bool ok = true;
    rest.for_each([&](int u) {
      if (ok && !g.neighbors(u).intersects(rest)) ok = false;
    });
    return ok;
  }

  bool extend(const VertexSet& unassigned) {
    if (unassigned.empty()) return true;
    const int v = unassigned.first();
    const int remaining = unassigned.size();
    std::vector<int> pool;  // candidates above v
    unassigned.for_each([&](int u) {
      if (u > v) pool.push_back(u);
    });
    for (int s : sizes) {
      if (s > remaining) break;
      if (remaining - s == 1) continue;  // a single vertex can never be a block
      std::vector<int> members(static_cast<std::size_t>(s));
      members[0] = v;
      if (combinations(pool, 0, 1, members, s)) return true;
    }
    return false;
  }

  // Lexicographic (s-1)-subsets of pool appended after the fixed lowest
  // vertex; returns true once a completion succeeds.
  bool combinations(const std::vector<int>& pool, std::size_t from, int filled,
                    std::vector<int>& members, int s) {
    if (filled == s) return attempt(members);
    for (std::size_t i = from;
         pool.size() - i >= static_cast<std::size_t>(s - filled); ++i) {
      members[static_cast<std::size_t>(filled)] = pool[i];
      if (combinations(pool, i + 1, filled + 1, members, s)) return true;
    }
    return false;
  }

  bool attempt(const std::vector<int>& members) {
    const int s = static_cast<int>(members.size());
    std::optional<FactorBlock> block =
        (s <= k + 1) ? try_star(members) : try_family(members);
    if (!block) return false;
    VertexSet unassigned = VertexSet::full(g.order());
    for (const auto& b : blocks) unassigned -= b.vertices;
    VertexSet rest = unassigned - block->vertices;
    if (!viable_rest(rest)) return false;
    blocks.push_back(std::move(*block));
    if (extend(rest)) return true;
    blocks.pop_back();
    return false;
  }
};

}  // namespace

std::optional<FactorCertificate> find_factor(const Graph& g, int k,
                                             const TreeCatalog& catalog,
                                             int cap) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (catalog.k() != k)
    throw Error(ErrorKind::InvalidParameters,
                "catalog was built for k=" + std::to_string(catalog.k()));
  check_cap(g, cap, "factor search");
  if (catalog.max_order() < g.order())
    throw Error(ErrorKind::CatalogTooSmall,
                "catalog covers orders up to " +
                    std::to_string(catalog.max_order()) + ", graph has " +
                    std::to_string(g.order()));

  FactorSearch search{g, k, catalog, {}, {}};
  for (int s = 2; s <= k + 1; ++s) search.sizes.push_back(s);
  for (const auto& [order, codes] : catalog.members())
    if (!codes.empty()) search.sizes.push_back(order);

  if (!search.extend(VertexSet::full(g.order()))) return std::nullopt;
  FactorCertificate cert;
  cert.blocks = std::move(search.blocks);
  return cert;
}

VerifyResult verify_certificate(const Graph& g, int k,
                                const FactorCertificate& cert,
                                const TreeCatalog& catalog) {
  auto fail = [](std::string reason) { return VerifyResult{false, std::move(reason)}; };
  if (catalog.k() != k) return fail("catalog was built for a different k");

  VertexSet covered(g.order());
  for (const auto& block : cert.blocks) {
    if (block.vertices.universe() != g.order())
      return fail("block vertex set universe mismatch");
    if (block.vertices.empty()) return fail("empty block");
    if (covered.intersects(block.vertices)) return fail("not a partition");
    covered |= block.vertices;
  }
  if (covered != VertexSet::full(g.order()))
    return fail("not a partition: uncovered vertices remain");

  for (const auto& block : cert.blocks) {
    const int size = block.vertices.size();
    std::set<std::pair<int, int>> seen;
    std::map<int, int> deg;
    for (auto [u, v] : block.edges) {
      if (!block.vertices.contains(u) || !block.vertices.contains(v))
        return fail("edge leaves its block");
      if (!g.has_edge(u, v)) return fail("edge not present in the graph");
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second)
        return fail("duplicate edge in block");
      ++deg[u];
      ++deg[v];
    }
    if (block.kind == FactorBlock::Kind::Star) {
      const int j = block.star_leaves;
      if (j < 1) return fail("star must have at least one leaf");
      if (j > k) return fail("star size exceeds k");
      if (size != j + 1) return fail("star block size mismatch");
      if (static_cast<int>(block.edges.size()) != j)
        return fail("star edge count mismatch");
      int centers = 0, leaves = 0;
      for (auto [v, d] : deg) {
        if (d == j) ++centers;
        if (d == 1) ++leaves;
      }
      // j == 1 is a single edge; both endpoints qualify as center.
      if (centers < 1 || leaves < j) return fail("edges do not form a star");
    } else {
      if (static_cast<int>(block.edges.size()) != size - 1)
        return fail("family block edge count is not order-1");
      // Relabel into a standalone tree and re-derive its code.
      std::map<int, int> local;
      block.vertices.for_each([&](int v) {
        const int id = static_cast<int>(local.size());
        local[v] = id;
      });
      std::vector<std::pair<int, int>> local_edges;
      for (auto [u, v] : block.edges) local_edges.emplace_back(local[u], local[v]);
      Graph tree(size, local_edges);
      if (!is_tree(tree)) return fail("family block edges do not form a tree");
      const std::string code = canonical_code(tree);
      if (code != block.family_code)
        return fail("family code does not match the block's tree");
      if (size > catalog.max_order()) return fail("block larger than the catalog");
      if (!catalog.contains(size, code))
        return fail("family code not in the catalog");
    }
  }
  return VerifyResult{true, ""};
}

}  // namespace factor
