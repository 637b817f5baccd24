#include "doctest.h"

#include <random>

#include "factor/extremal.hpp"
#include "factor/factor_theory.hpp"
#include "support.hpp"

using namespace factor;
using namespace factor::testing;

TEST_CASE("deficiency on hand-checked graphs") {
  auto star = deficiency(star_graph(4), 2);
  CHECK(star.value == 1);  // 2*3 - 5 at the center
  CHECK(star.best_set == VertexSet::of(4, {0}));
  CHECK(star.isolated == 3);

  auto c4 = deficiency(cycle_graph(4), 2);
  CHECK(c4.value == 0);
  CHECK(c4.best_set.empty());

  auto r51 = deficiency(extremal_remark51(2, 0), 2);
  CHECK(r51.value == 2);
  CHECK(r51.best_set == VertexSet::of(8, {0, 1}));

  CHECK(deficiency(empty_graph(0), 2).value == 0);
  CHECK_THROWS_AS(deficiency(empty_graph(30), 2), Error);
  CHECK_THROWS_AS(deficiency(empty_graph(3), 1), Error);

  // The reported isolated count matches a recount on the reported set,
  // and the maximum is never negative.
  std::mt19937_64 seeds(41);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_gnp(2 + static_cast<int>(seeds() % 8), 0.3, seeds());
    auto rep = deficiency(g, 2);
    CHECK(rep.value >= 0);
    CHECK(rep.isolated == isolated_count(delete_vertices(g, rep.best_set).graph));
  }
}

TEST_CASE("pruned search equals full enumeration on all small graphs") {
  // Every labeled graph on up to 5 vertices, connected or not.
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      Graph g(n, edges);
      auto fast = deficiency(g, 2);
      auto slow = brute_deficiency(g, 2);
      CHECK(fast.value == slow.value);
      CHECK(fast.best_set == slow.best_set);
      CHECK(fast.isolated == slow.isolated);
    }
  }
  // The connected corpus up to order 8 at both k values.
  for (const Graph& g : corpus_graphs(8)) {
    for (int k : {2, 3}) {
      auto fast = deficiency(g, k);
      auto slow = brute_deficiency(g, k);
      CHECK(fast.value == slow.value);
      CHECK(fast.best_set == slow.best_set);
      CHECK(fast.isolated == slow.isolated);
    }
  }
  // Disconnected shapes with isolated vertices.
  std::mt19937_64 seeds(17);
  for (int trial = 0; trial < 120; ++trial) {
    int n = static_cast<int>(seeds() % 9);
    Graph g = random_gnp(n, 0.25, seeds());
    auto fast = deficiency(g, 2);
    auto slow = brute_deficiency(g, 2);
    CHECK(fast.value == slow.value);
    CHECK(fast.best_set == slow.best_set);
  }
}

TEST_CASE("factor existence by the exact criterion") {
  CHECK(has_factor_thm11(cycle_graph(4), 2));
  CHECK_FALSE(has_factor_thm11(empty_graph(3), 2));
  CHECK_FALSE(has_factor_thm11(star_graph(4), 2));
  CHECK(has_factor_thm11(complete_graph(9), 2));

  ConditionVerdict v = check_thm11(star_graph(4), 2);
  CHECK(v.applicable);
  CHECK_FALSE(*v.holds);
  auto w = std::get<ViolatingSetWitness>(v.witness);
  CHECK(w.value == 1);
  CHECK(w.set == VertexSet::of(4, {0}));
}

TEST_CASE("independence number and fixed-size independent sets") {
  CHECK(independence_number(cycle_graph(6)) == 3);
  CHECK(independence_number(join(complete_graph(2), empty_graph(6))) == 6);
  CHECK(independence_number(complete_graph(5)) == 1);
  CHECK(independence_number(empty_graph(7)) == 7);
  CHECK(independent_sets_of_size(complete_graph(3), 2).empty());
  CHECK(independent_sets_of_size(cycle_graph(5), 2).size() == 5);
  CHECK_THROWS_AS(independence_number(empty_graph(21)), Error);

  std::mt19937_64 seeds(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(seeds() % 10);
    Graph g = random_gnp(n, 0.4, seeds());
    CHECK(independence_number(g) == brute_alpha(g));
  }
}

TEST_CASE("vertex connectivity by separator enumeration") {
  CHECK(is_t_connected(cycle_graph(5), 2));
  CHECK_FALSE(is_t_connected(cycle_graph(5), 3));
  CHECK(is_t_connected(complete_graph(4), 3));
  CHECK_FALSE(is_t_connected(complete_graph(4), 4));  // needs n >= t+1
  CHECK_FALSE(is_t_connected(disjoint_union(complete_graph(2), complete_graph(2)), 1));
  CHECK(is_t_connected(complete_graph(1), 0));
  CHECK(is_t_connected(star_graph(5), 1));
  CHECK_FALSE(is_t_connected(star_graph(5), 2));
  CHECK_THROWS_AS(is_t_connected(path_graph(3), -1), Error);
}

TEST_CASE("edge threshold formula") {
  CHECK(extremal_edge_threshold(9, 2, 1) == 18);
  CHECK(extremal_edge_threshold(11, 2, 2) == 22);  // binom(5,2) + 2*6
  CHECK_THROWS_AS(extremal_edge_threshold(2, 2, 1), Error);
}

TEST_CASE("condition 13") {
  ConditionVerdict tight = check_thm13(extremal_remark31(9, 2, 1), 2, 1);
  CHECK(tight.applicable);
  CHECK_FALSE(*tight.holds);  // equality is not enough
  auto w = std::get<EdgeCountWitness>(tight.witness);
  CHECK(w.edges == 18);
  CHECK(w.threshold == 18);

  ConditionVerdict k9 = check_thm13(complete_graph(9), 2, 1);
  CHECK(k9.applicable);
  CHECK(*k9.holds);
  CHECK(has_factor_thm11(complete_graph(9), 2));

  ConditionVerdict c9 = check_thm13(cycle_graph(9), 2, 1);
  CHECK(c9.applicable);
  CHECK_FALSE(*c9.holds);

  CHECK_FALSE(check_thm13(complete_graph(9), 2, 0).applicable);
  CHECK_FALSE(check_thm13(complete_graph(9), 2, 2).applicable);
  CHECK_FALSE(check_thm13(complete_graph(4), 2, 1).applicable);  // order bound
  CHECK_FALSE(check_thm13(cycle_graph(12), 3, 2).applicable);    // connectivity
}

TEST_CASE("condition 14") {
  ConditionVerdict star = check_thm14(star_graph(4), 2);
  CHECK(star.applicable);
  CHECK_FALSE(*star.holds);
  auto w = std::get<IndependentSetWitness>(star.witness);
  CHECK(w.set == VertexSet::of(4, {1, 2, 3}));
  CHECK(w.degrees == std::vector<int>{1, 1, 1});

  // C6: the required set size exceeds alpha, so the condition is vacuous.
  ConditionVerdict c6 = check_thm14(cycle_graph(6), 2);
  CHECK(c6.applicable);
  CHECK(*c6.holds);
  CHECK(has_factor_thm11(cycle_graph(6), 2));

  ConditionVerdict r41 = check_thm14(extremal_remark41(2, 3), 2);
  CHECK(r41.applicable);
  CHECK_FALSE(*r41.holds);
  auto w41 = std::get<IndependentSetWitness>(r41.witness);
  CHECK(w41.set.size() == 8);
  for (int d : w41.degrees) CHECK(d == 3);
  CHECK_FALSE(has_factor_thm11(extremal_remark41(2, 3), 2));

  CHECK_FALSE(check_thm14(empty_graph(3), 2).applicable);
  CHECK_FALSE(check_thm14(empty_graph(0), 2).applicable);
}

TEST_CASE("condition 15") {
  ConditionVerdict r51 = check_thm15(join(complete_graph(2), empty_graph(6)), 2);
  CHECK(r51.applicable);
  CHECK_FALSE(*r51.holds);
  auto w = std::get<DegreeAlphaWitness>(r51.witness);
  CHECK(w.min_degree == 2);
  CHECK(w.alpha == 6);

  ConditionVerdict k5 = check_thm15(complete_graph(5), 2);
  CHECK(k5.applicable);
  CHECK(*k5.holds);

  ConditionVerdict c6 = check_thm15(cycle_graph(6), 2);
  CHECK(c6.applicable);
  CHECK(*c6.holds);
  CHECK_FALSE(check_thm15(empty_graph(0), 2).applicable);
}

TEST_CASE("remark graphs have the designed deficiency") {
  for (int k : {2, 3}) {
    for (int t = 1; t <= k - 1; ++t) {
      const int base = static_cast<int>((2 * k + 3) * t / 2 + 1);
      for (int n = base; n <= base + 4; ++n) {
        if (n == base + 1) continue;  // a lone inner-clique vertex is isolated too
        Graph g = extremal_remark31(n, k, t);
        if (g.order() > kDeficiencyCap) continue;
        auto rep = deficiency(g, k);
        const long long iso = (2LL * k + 1) * t / 2 + 1;
        CHECK(rep.value == 2 * iso - (2LL * k + 1) * t);
        CHECK(rep.value > 0);
        VertexSet clique(g.order());
        for (int v = 0; v < t; ++v) clique.add(v);
        CHECK(rep.best_set == clique);
      }
    }
    for (int delta = 1; delta <= 3; delta += 2) {
      Graph g = extremal_remark41(k, delta);
      auto rep = deficiency(g, k);
      CHECK(rep.value == 2 * ((2LL * k + 1) * delta / 2 + 1) - (2LL * k + 1) * delta);
      CHECK(rep.value > 0);
    }
    for (int t = 0; t <= 1; ++t) {
      Graph g = extremal_remark51(k, t);
      if (g.order() > kDeficiencyCap) continue;
      auto rep = deficiency(g, k);
      CHECK(rep.value == 2);
      VertexSet clique(g.order());
      for (int v = 0; v < 2 + 2 * t; ++v) clique.add(v);
      CHECK(rep.best_set == clique);
    }
  }
}

TEST_CASE("threshold dominates the comparison graph across the window") {
  // For every t < s in range and n large enough, the densest graph left
  // short of a factor by an s-set never beats the t-threshold, strictly
  // once s >= t+2.
  for (int k = 2; k <= 5; ++k) {
    for (int t = 1; t <= k - 1; ++t) {
      for (int s = t + 1; s <= t + 6; ++s) {
        const long long fl32 = (2LL * k + 3) * s / 2;
        const long long order_bound_num =
            (2LL * k * k + 5 * k + 1) * t + k * k + 5LL * k + 2;
        const long long n_lo =
            std::max((order_bound_num + 2 * k - 1) / (2 * k), fl32 + 1);
        for (long long n = n_lo; n <= n_lo + 10; ++n) {
          Graph g1 = extremal_g1(static_cast<int>(n), k, s);
          const long long slack =
              extremal_edge_threshold(n, k, t) - g1.edge_count();
          CHECK(slack >= 0);
          if (s >= t + 2) CHECK(slack > 0);
        }
      }
    }
  }
}
