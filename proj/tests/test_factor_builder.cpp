#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "factor/factor_builder.hpp"
#include "factor/factor_theory.hpp"
#include "support.hpp"

using namespace factor;
using namespace factor::testing;

namespace {

Graph order7_member() {
  return Graph(7, {{0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
}

}  // namespace

TEST_CASE("spanning tree enumeration") {
  CHECK(spanning_trees(cycle_graph(4)).size() == 4);
  CHECK(spanning_trees(complete_graph(3)).size() == 3);
  CHECK(spanning_trees(complete_graph(5)).size() == 125);  // n^(n-2)
  CHECK(spanning_trees(path_graph(4)).size() == 1);
  CHECK(spanning_trees(path_graph(4)).front() == path_graph(4).edges());
  CHECK_THROWS_AS(spanning_trees(disjoint_union(path_graph(2), path_graph(2))),
                  Error);
  CHECK_THROWS_AS(spanning_trees(empty_graph(0)), Error);

  // Every yielded edge set is a distinct spanning tree.
  Graph g = random_gnp(7, 0.5, 99);
  if (is_connected(g)) {
    auto trees = spanning_trees(g);
    std::set<std::vector<std::pair<int, int>>> distinct(trees.begin(), trees.end());
    CHECK(distinct.size() == trees.size());
    for (const auto& t : trees) CHECK(is_tree(Graph(7, t)));
  }
}

TEST_CASE("factor search on hand-checked graphs") {
  TreeCatalog catalog = enumerate_catalog(2, 10);

  auto c6 = find_factor(cycle_graph(6), 2, catalog);
  REQUIRE(c6.has_value());
  CHECK(c6->blocks.size() == 3);
  for (const auto& b : c6->blocks) {
    CHECK(b.kind == FactorBlock::Kind::Star);
    CHECK(b.star_leaves == 1);
  }
  // Deterministic: lowest vertex grabs its lowest neighbor first.
  CHECK(c6->blocks[0].vertices == VertexSet::of(6, {0, 1}));
  CHECK(c6->blocks[1].vertices == VertexSet::of(6, {2, 3}));
  CHECK(c6->blocks[2].vertices == VertexSet::of(6, {4, 5}));
  CHECK(verify_certificate(cycle_graph(6), 2, *c6, catalog));

  CHECK_FALSE(find_factor(star_graph(4), 2, catalog).has_value());

  auto member = find_factor(order7_member(), 2, catalog);
  REQUIRE(member.has_value());
  CHECK(member->blocks.size() == 1);
  CHECK(member->blocks[0].kind == FactorBlock::Kind::FamilyMember);
  CHECK(member->blocks[0].vertices == VertexSet::full(7));
  CHECK(verify_certificate(order7_member(), 2, *member, catalog));

  CHECK_FALSE(find_factor(empty_graph(3), 2, catalog).has_value());
  CHECK(find_factor(empty_graph(0), 2, catalog).has_value());

  CHECK_THROWS_AS(find_factor(path_graph(11), 2, enumerate_catalog(2, 8)), Error);
  CHECK_THROWS_AS(find_factor(path_graph(4), 3, catalog), Error);
}

TEST_CASE("certificate verification catches corruption") {
  TreeCatalog catalog = enumerate_catalog(2, 10);
  Graph g = cycle_graph(6);
  FactorCertificate cert = *find_factor(g, 2, catalog);

  FactorCertificate overlap = cert;
  overlap.blocks[1].vertices = overlap.blocks[0].vertices;
  auto r1 = verify_certificate(g, 2, overlap, catalog);
  CHECK_FALSE(r1);
  CHECK(r1.reason.find("partition") != std::string::npos);

  FactorCertificate big_star = cert;
  big_star.blocks[0].star_leaves = 3;
  auto r2 = verify_certificate(g, 2, big_star, catalog);
  CHECK_FALSE(r2);
  CHECK(r2.reason.find("exceeds k") != std::string::npos);

  FactorCertificate fake_edge = cert;
  fake_edge.blocks[0].edges = {{0, 3}};
  fake_edge.blocks[0].vertices = VertexSet::of(6, {0, 3});
  fake_edge.blocks[1].vertices = VertexSet::of(6, {1, 2});
  fake_edge.blocks[1].edges = {{1, 2}};
  auto r3 = verify_certificate(g, 2, fake_edge, catalog);
  CHECK_FALSE(r3);
  CHECK(r3.reason.find("not present") != std::string::npos);

  // A family block whose edges form the wrong tree.
  Graph m = order7_member();
  FactorCertificate fam = *find_factor(m, 2, catalog);
  FactorCertificate wrong_code = fam;
  wrong_code.blocks[0].family_code = "(()())";
  auto r4 = verify_certificate(m, 2, wrong_code, catalog);
  CHECK_FALSE(r4);
  CHECK(r4.reason.find("code") != std::string::npos);
}

TEST_CASE("builder agrees with the exact criterion on the corpus") {
  TreeCatalog catalog = enumerate_catalog(2, 10);
  int factors = 0;
  for (const Graph& g : corpus_graphs(7)) {
    const bool exact = has_factor_thm11(g, 2);
    auto cert = find_factor(g, 2, catalog);
    CHECK(exact == cert.has_value());
    if (cert) {
      ++factors;
      CHECK(verify_certificate(g, 2, *cert, catalog));
    }
  }
  CHECK(factors > 100);
}

TEST_CASE("builder is isomorphism invariant") {
  TreeCatalog catalog = enumerate_catalog(2, 10);
  std::mt19937_64 rng(31);
  std::vector<Graph> pool = {order7_member(), cycle_graph(7), star_graph(6),
                             path_graph(8), random_gnp(8, 0.35, 4),
                             random_gnp(8, 0.5, 5)};
  for (const Graph& g : pool) {
    auto base = find_factor(g, 2, catalog);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(g.order()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = relabel(g, perm);
      auto relabeled = find_factor(h, 2, catalog);
      CHECK(base.has_value() == relabeled.has_value());
      if (base && relabeled) {
        CHECK(verify_certificate(h, 2, *relabeled, catalog));
        // Same multiset of block shapes.
        auto shape = [](const FactorCertificate& c) {
          std::vector<std::pair<int, std::string>> s;
          for (const auto& b : c.blocks)
            s.emplace_back(b.vertices.size(),
                           b.kind == FactorBlock::Kind::Star
                               ? "*" + std::to_string(b.star_leaves)
                               : b.family_code);
          std::sort(s.begin(), s.end());
          return s;
        };
        CHECK(shape(*base) == shape(*relabeled));
      }
    }
  }
}

TEST_CASE("star blocks prefer the smallest viable size") {
  TreeCatalog catalog = enumerate_catalog(2, 10);
  // A triangle with a pendant: 0-1-2-0 plus 2-3. Lowest vertex takes the
  // 2-block {0,1} first, leaving the edge {2,3}.
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto cert = find_factor(g, 2, catalog);
  REQUIRE(cert.has_value());
  CHECK(cert->blocks.size() == 2);
  CHECK(cert->blocks[0].vertices == VertexSet::of(4, {0, 1}));
  CHECK(cert->blocks[0].star_leaves == 1);
}
