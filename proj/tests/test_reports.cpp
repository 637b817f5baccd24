#include "doctest.h"

#include "factor/extremal.hpp"
#include "factor/graph6.hpp"
#include "factor/json_report.hpp"
#include "factor/sweep.hpp"
#include "support.hpp"

using namespace factor;
using namespace factor::testing;
using nlohmann::json;

TEST_CASE("deficiency reports round-trip through JSON") {
  DeficiencyReport r = deficiency(star_graph(4), 2);
  json j = r;
  auto back = j.get<DeficiencyReport>();
  CHECK(back == r);
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("verdicts round-trip through JSON") {
  std::vector<ConditionVerdict> verdicts = {
      check_thm11(star_graph(4), 2),
      check_thm12(cycle_graph(4), 2),
      check_thm12(complete_graph(1), 2),  // not applicable
      check_thm13(extremal_remark31(9, 2, 1), 2, 1),
      check_thm14(extremal_remark41(2, 3), 2),
      check_thm15(extremal_remark51(2, 0), 2),
  };
  for (const ConditionVerdict& v : verdicts) {
    json j = v;
    auto back = j.get<ConditionVerdict>();
    CHECK(back == v);
  }
}

TEST_CASE("certificates round-trip through JSON") {
  TreeCatalog catalog = enumerate_catalog(2, 10);
  Graph member(7, {{0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
  for (const Graph& g : {cycle_graph(6), member}) {
    auto cert = find_factor(g, 2, catalog);
    REQUIRE(cert.has_value());
    json j = *cert;
    auto back = j.get<FactorCertificate>();
    CHECK(back == *cert);
    CHECK(verify_certificate(g, 2, back, catalog));
  }
}

TEST_CASE("sweep over a small file") {
  std::vector<std::string> lines = {
      write_graph6(cycle_graph(6)),
      write_graph6(star_graph(4)),
      write_graph6(disjoint_union(empty_graph(3), empty_graph(0))),
      write_graph6(complete_graph(9)),
  };
  SweepOptions opt;
  opt.threads = 2;
  SweepReport rep = run_sweep(lines, opt);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.parse_errors == 0);
  CHECK(rep.counterexamples == 0);
  CHECK(rep.builder_mismatches == 0);
  CHECK(rep.factor_count == 2);

  CHECK(rep.rows[0].factor_exists);
  CHECK(*rep.rows[0].builder_found);
  CHECK_FALSE(rep.rows[1].factor_exists);
  CHECK(rep.rows[1].deficiency_value == 1);
  CHECK(rep.rows[2].deficiency_value == 6);
  CHECK_FALSE(rep.rows[2].any_sufficient_holds());
  CHECK(rep.rows[3].factor_exists);
  CHECK(rep.rows[3].t13.size() == 1);
  CHECK(rep.rows[3].t13[0].applicable_and_holds());
}

TEST_CASE("sweep skips the builder above its cap but still decides exactly") {
  Graph big = random_gnp(14, 0.6, 7);
  SweepReport rep = run_sweep({write_graph6(big)}, SweepOptions{});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].error.empty());
  CHECK_FALSE(rep.rows[0].builder_found.has_value());
  CHECK(rep.rows[0].factor_exists ==
        (rep.rows[0].deficiency_value == 0));
  CHECK(rep.builder_mismatches == 0);
}

TEST_CASE("sweep reports parse failures per row") {
  std::vector<std::string> lines = {"A_", "!!bogus!!", "Bw"};
  SweepReport rep = run_sweep(lines, SweepOptions{});
  CHECK(rep.parse_errors == 1);
  CHECK_FALSE(rep.rows[1].error.empty());
  CHECK(rep.rows[0].error.empty());
  CHECK(rep.rows[2].error.empty());
}

TEST_CASE("empty sweep") {
  SweepReport rep = run_sweep({}, SweepOptions{});
  CHECK(rep.rows.empty());
  CHECK(rep.counterexamples == 0);
  CHECK(rep.parse_errors == 0);
}

TEST_CASE("sweep reports round-trip through JSON") {
  std::vector<std::string> lines = {write_graph6(cycle_graph(6)),
                                    write_graph6(star_graph(4)), "broken"};
  SweepReport rep = run_sweep(lines, SweepOptions{});
  json j = rep;
  auto back = j.get<SweepReport>();
  CHECK(back == rep);
}

TEST_CASE("sweep is reproducible") {
  std::vector<std::string> lines = corpus_lines(5);
  SweepOptions opt;
  opt.threads = 4;
  SweepReport a = run_sweep(lines, opt);
  opt.threads = 1;
  SweepReport b = run_sweep(lines, opt);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].deficiency_value == b.rows[i].deficiency_value);
    CHECK(a.rows[i].factor_exists == b.rows[i].factor_exists);
    CHECK(a.rows[i].t12 == b.rows[i].t12);
    CHECK(a.rows[i].t14 == b.rows[i].t14);
    CHECK(a.rows[i].t15 == b.rows[i].t15);
  }
  CHECK(a.counterexamples == 0);
}
