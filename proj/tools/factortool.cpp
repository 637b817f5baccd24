// Command-line front end: existence checks, certificates, catalogs,
// extremal constructions, spectra, and corpus sweeps.
//
// Exit codes: 0 condition holds / factor found / success, 1 condition
// fails / no factor / counterexample found, 2 condition not applicable,
// 3 input error, 64 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "factor/extremal.hpp"
#include "factor/factor_builder.hpp"
#include "factor/factor_theory.hpp"
#include "factor/graph6.hpp"
#include "factor/json_report.hpp"
#include "factor/spectral.hpp"
#include "factor/sweep.hpp"
#include "factor/tree_family.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitNotApplicable = 2;
constexpr int kExitInputError = 3;
constexpr int kExitUsage = 64;

struct GraphSource {
  std::string graph6;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph6", graph6, "graph in graph6 notation");
    cmd->add_option("--file", file,
                    "path to a graph6 line or an \"n m\" edge list");
  }

  bool present() const { return !graph6.empty() || !file.empty(); }

  factor::Graph load() const {
    if (!graph6.empty()) return factor::parse_graph6(graph6);  // wins over --file
    return factor::read_graph_file(file);
  }
};

std::string format_set(const factor::VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out.empty() ? "(empty)" : out;
}

void print_witness(const factor::ConditionVerdict& v) {
  using namespace factor;
  if (const auto* w = std::get_if<ViolatingSetWitness>(&v.witness)) {
    std::printf("violating set: %s  (|S|=%d, isolated=%d, 2i-(2k+1)|S|=%lld)\n",
                format_set(w->set).c_str(), w->set.size(), w->isolated,
                static_cast<long long>(w->value));
  } else if (const auto* w2 = std::get_if<EigenvalueWitness>(&v.witness)) {
    std::printf("mu_1 = %.12g, mu_{n-1} = %.12g\n", w2->mu1,
                w2->mu_second_smallest);
  } else if (const auto* w3 = std::get_if<EdgeCountWitness>(&v.witness)) {
    std::printf("edges = %lld, threshold(t=%d) = %lld\n", w3->edges, w3->t,
                w3->threshold);
  } else if (const auto* w4 = std::get_if<IndependentSetWitness>(&v.witness)) {
    std::string degrees;
    for (int d : w4->degrees) {
      if (!degrees.empty()) degrees += ' ';
      degrees += std::to_string(d);
    }
    std::printf("independent set: %s  (degrees: %s)\n",
                format_set(w4->set).c_str(), degrees.c_str());
  } else if (const auto* w5 = std::get_if<DegreeAlphaWitness>(&v.witness)) {
    std::printf("min degree = %d, independence number = %d\n", w5->min_degree,
                w5->alpha);
  }
}

int report_verdict(const factor::ConditionVerdict& v, bool as_json) {
  if (as_json) {
    std::cout << nlohmann::json(v).dump(2) << "\n";
  } else {
    std::printf("condition %s: ", factor::to_string(v.condition));
    if (!v.applicable) {
      std::printf("not applicable (%s)\n", v.reason.c_str());
    } else if (*v.holds) {
      std::printf("holds\n");
      print_witness(v);
      if (v.condition != factor::Condition::T11)
        std::printf("=> a factor exists\n");
    } else {
      std::printf("fails\n");
      print_witness(v);
      if (v.condition == factor::Condition::T11)
        std::printf("=> the graph has no factor\n");
      else
        std::printf("(one-sided test: no conclusion about factor existence)\n");
    }
  }
  if (!v.applicable) return kExitNotApplicable;
  return *v.holds ? kExitHolds : kExitFails;
}

int run_check(const GraphSource& source, int thm, int k, int t, double tol,
              int cap, bool as_json) {
  factor::Graph g = source.load();
  factor::ConditionVerdict v;
  switch (thm) {
    case 11: v = factor::check_thm11(g, k, cap); break;
    case 12: v = factor::check_thm12(g, k, tol); break;
    case 13: v = factor::check_thm13(g, k, t, cap); break;
    case 14: v = factor::check_thm14(g, k, cap); break;
    case 15: v = factor::check_thm15(g, k, cap); break;
    default:
      throw factor::Error(factor::ErrorKind::InvalidParameters,
                          "--thm must be one of 11, 12, 13, 14, 15");
  }
  return report_verdict(v, as_json);
}

int run_deficiency(const GraphSource& source, int k, int cap, bool as_json) {
  factor::Graph g = source.load();
  factor::DeficiencyReport r = factor::deficiency(g, k, cap);
  if (as_json) {
    std::cout << nlohmann::json(r).dump(2) << "\n";
  } else {
    std::printf("k: %d\n", r.k);
    std::printf("value: %lld\n", static_cast<long long>(r.value));
    std::printf("isolated: %d\n", r.isolated);
    std::printf("best_set: %s\n", format_set(r.best_set).c_str());
    std::printf("factor: %s\n", r.value == 0 ? "yes" : "no");
  }
  return r.value == 0 ? kExitHolds : kExitFails;
}

int run_factor(const GraphSource& source, int k, int cap, bool as_json) {
  factor::Graph g = source.load();
  factor::TreeCatalog catalog =
      factor::enumerate_catalog(k, std::max(g.order(), 1));
  auto cert = factor::find_factor(g, k, catalog, cap);
  if (!cert) {
    factor::DeficiencyReport r = factor::deficiency(g, k);
    if (as_json) {
      nlohmann::json j{{"factor", nullptr}, {"deficiency", r}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::printf("NO FACTOR\n");
      std::printf("violating set: %s  (|S|=%d, isolated=%d, value=%lld)\n",
                  format_set(r.best_set).c_str(), r.best_set.size(), r.isolated,
                  static_cast<long long>(r.value));
    }
    return kExitFails;
  }
  auto verified = factor::verify_certificate(g, k, *cert, catalog);
  if (!verified)
    throw factor::Error(factor::ErrorKind::InvalidParameters,
                        "internal: certificate failed verification: " +
                            verified.reason);
  if (as_json) {
    nlohmann::json j{{"factor", *cert}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("FACTOR with %zu component(s)\n", cert->blocks.size());
    for (const auto& b : cert->blocks) {
      if (b.kind == factor::FactorBlock::Kind::Star)
        std::printf("  star K_{1,%d}: vertices %s; edges", b.star_leaves,
                    format_set(b.vertices).c_str());
      else
        std::printf("  tree[%d] %s: vertices %s; edges", b.vertices.size(),
                    b.family_code.c_str(), format_set(b.vertices).c_str());
      for (auto [u, v] : b.edges) std::printf(" (%d,%d)", u, v);
      std::printf("\n");
    }
  }
  return kExitHolds;
}

int run_catalog(int k, int max_order, const std::string& dot_dir) {
  factor::TreeCatalog catalog = factor::enumerate_catalog(k, max_order);
  for (const auto& [order, codes] : catalog.members())
    std::printf("order %d: %zu member(s)\n", order, codes.size());
  std::printf("total: %d\n", catalog.member_count());
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (const auto& [order, codes] : catalog.members()) {
      int index = 0;
      for (const auto& code : codes) {
        factor::Graph member =
            factor::construct_tr(catalog.witness_for(code), k);
        char name[64];
        std::snprintf(name, sizeof name, "member_%03d_%02d", order, index++);
        std::ofstream out(dot_dir + "/" + name + ".dot");
        factor::write_dot(out, member, name);
      }
    }
  }
  return kExitHolds;
}

int run_spectrum(const GraphSource& source, double tol) {
  factor::Graph g = source.load();
  factor::Spectrum s = factor::laplacian_spectrum(g, tol);
  for (double v : s.values) std::printf("%.12g\n", v);
  return kExitHolds;
}

void verify_or_die(bool ok, const std::string& what) {
  if (!ok)
    throw factor::Error(factor::ErrorKind::InvalidParameters,
                        "verification failed: " + what);
  std::fprintf(stderr, "verified: %s\n", what.c_str());
}

int run_extremal(const std::string& kind, int n, int k, int t, int delta, int s,
                 bool verify) {
  using namespace factor;
  Graph g;
  if (kind == "r31")
    g = extremal_remark31(n, k, t);
  else if (kind == "r41")
    g = extremal_remark41(k, delta);
  else if (kind == "r51")
    g = extremal_remark51(k, t);
  else
    g = extremal_g1(n, k, s);
  std::printf("%s\n", write_graph6(g).c_str());

  if (!verify) return kExitHolds;
  if (kind == "r31") {
    verify_or_die(g.edge_count() == extremal_edge_threshold(g.order(), k, t),
                  "edge count equals the threshold");
    ConditionVerdict v = check_thm13(g, k, t);
    verify_or_die(v.applicable && !*v.holds, "condition 13 fails at equality");
    DeficiencyReport r = deficiency(g, k);
    verify_or_die(r.value > 0, "no factor (positive deficiency)");
  } else if (kind == "r41") {
    verify_or_die((2LL * k + 3) * delta == 2LL * g.order() - 1,
                  "(2k+3)*delta matches 2n-1");
    ConditionVerdict v = check_thm14(g, k);
    verify_or_die(v.applicable && !*v.holds, "condition 14 fails at the boundary");
    verify_or_die(deficiency(g, k).value > 0, "no factor (positive deficiency)");
  } else if (kind == "r51") {
    const int alpha = independence_number(g);
    verify_or_die(min_degree(g) == 2 + 2 * t, "min degree is 2+2t");
    verify_or_die(alpha == (1 + t) * (2 * k + 1) + 1, "alpha is (1+t)(2k+1)+1");
    verify_or_die((2LL * k + 1) * min_degree(g) == 2LL * alpha - 2,
                  "(2k+1)*delta equals 2*alpha-2");
    ConditionVerdict v = check_thm15(g, k);
    verify_or_die(v.applicable && !*v.holds, "condition 15 fails at the boundary");
    verify_or_die(deficiency(g, k).value > 0, "no factor (positive deficiency)");
  } else {
    verify_or_die(g.edge_count() == extremal_edge_threshold(g.order(), k, s),
                  "edge count equals the threshold at t=s");
  }
  return kExitHolds;
}

int run_sweep_cmd(const std::string& file, const factor::SweepOptions& opt,
                  bool as_json) {
  factor::SweepReport rep = factor::run_sweep(factor::read_graph6_lines(file), opt);
  if (as_json) {
    std::cout << nlohmann::json(rep).dump(2) << "\n";
  } else {
    std::printf("%-14s %3s %4s %5s %3s %3s  %3s %3s %3s %3s %s\n", "graph6", "n",
                "m", "def", "f11", "fb", "t12", "t13", "t14", "t15", "flags");
    auto mark = [](const factor::ConditionVerdict& v) {
      if (!v.applicable) return "na";
      return *v.holds ? "H" : "f";
    };
    for (const auto& row : rep.rows) {
      if (!row.error.empty()) {
        std::printf("%-14s ERROR %s\n", row.graph6.c_str(), row.error.c_str());
        continue;
      }
      const char* t13 = "na";
      for (const auto& v : row.t13) {
        if (v.applicable_and_holds()) {
          t13 = "H";
          break;
        }
        if (v.applicable) t13 = "f";
      }
      std::printf("%-14s %3d %4lld %5lld %3s %3s  %3s %3s %3s %3s %s\n",
                  row.graph6.c_str(), row.n, row.m, row.deficiency_value,
                  row.factor_exists ? "Y" : "n",
                  row.builder_found ? (*row.builder_found ? "Y" : "n") : "-",
                  mark(row.t12), t13, mark(row.t14), mark(row.t15),
                  row.counterexample() ? "COUNTEREXAMPLE" : "");
    }
    std::printf("rows=%zu factors=%d holds12=%d holds13=%d holds14=%d "
                "holds15=%d counterexamples=%d builder_mismatches=%d "
                "parse_errors=%d\n",
                rep.rows.size(), rep.factor_count, rep.holds12, rep.holds13,
                rep.holds14, rep.holds15, rep.counterexamples,
                rep.builder_mismatches, rep.parse_errors);
  }
  if (rep.counterexamples > 0 || rep.builder_mismatches > 0) return kExitFails;
  if (rep.parse_errors > 0) return kExitInputError;
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"component-factor toolkit: exact existence tests, sufficient "
               "conditions, certificates, catalogs, spectra"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "evaluate one condition");
  GraphSource check_src;
  int thm = 11, check_k = 2, check_t = 1, check_cap = factor::kDeficiencyCap;
  double check_tol = factor::kDefaultTolerance;
  bool check_json = false;
  check->add_option("--thm", thm, "condition id")->required()
      ->check(CLI::IsMember({11, 12, 13, 14, 15}));
  check->add_option("-k,--k", check_k, "star bound k >= 2")->required();
  check->add_option("--t", check_t, "connectivity parameter for condition 13");
  check->add_option("--tol", check_tol, "eigenvalue tolerance for condition 12");
  check->add_option("--cap", check_cap, "search size cap");
  check->add_flag("--json", check_json, "machine-readable output");
  check_src.attach(check);

  // deficiency
  auto* defc = app.add_subcommand("deficiency", "exact deficiency maximum");
  GraphSource def_src;
  int def_k = 2, def_cap = factor::kDeficiencyCap;
  bool def_json = false;
  defc->add_option("-k,--k", def_k, "star bound k >= 2")->required();
  defc->add_option("--cap", def_cap, "search size cap");
  defc->add_flag("--json", def_json, "machine-readable output");
  def_src.attach(defc);

  // factor
  auto* fac = app.add_subcommand("factor", "construct a factor certificate");
  GraphSource fac_src;
  int fac_k = 2, fac_cap = factor::kFactorSearchCap;
  bool fac_json = false;
  fac->add_option("-k,--k", fac_k, "star bound k >= 2")->required();
  fac->add_option("--cap", fac_cap, "search size cap");
  fac->add_flag("--json", fac_json, "machine-readable output");
  fac_src.attach(fac);

  // catalog
  auto* cat = app.add_subcommand("catalog", "enumerate the tree family");
  int cat_k = 2;
  int cat_max_order = 7;
  std::string dot_dir;
  cat->add_option("-k,--k", cat_k, "star bound k >= 2")->required();
  cat->add_option("--max-order", cat_max_order, "largest member order")
      ->required();
  cat->add_option("--dot", dot_dir, "write one DOT file per member here");

  // extremal
  auto* ext = app.add_subcommand("extremal", "tight example constructions");
  std::string ext_kind;
  int ext_n = 0, ext_k = 2, ext_t = 0, ext_delta = 1, ext_s = 1;
  bool ext_verify = false;
  ext->add_option("kind", ext_kind, "one of r31, r41, r51, g1")->required()
      ->check(CLI::IsMember({"r31", "r41", "r51", "g1"}));
  ext->add_option("-n,--n", ext_n, "order (r31, g1)");
  ext->add_option("-k,--k", ext_k, "star bound k >= 2")->required();
  ext->add_option("--t", ext_t, "clique size parameter (r31, r51)");
  ext->add_option("--delta", ext_delta, "minimum degree (r41)");
  ext->add_option("--s", ext_s, "removal set size (g1)");
  ext->add_flag("--verify", ext_verify, "assert the designed properties");

  // spectrum
  auto* spect = app.add_subcommand("spectrum", "Laplacian eigenvalues");
  GraphSource spect_src;
  double spect_tol = factor::kDefaultTolerance;
  spect->add_option("--tol", spect_tol, "absolute tolerance");
  spect_src.attach(spect);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate every graph in a file");
  std::string sweep_file;
  factor::SweepOptions sweep_opt;
  bool sweep_json = false;
  sweep->add_option("file", sweep_file, "graph6 lines, one per graph")
      ->required();
  sweep->add_option("-k,--k", sweep_opt.k, "star bound k >= 2")->required();
  sweep->add_option("--tol", sweep_opt.tol, "eigenvalue tolerance");
  sweep->add_option("--threads", sweep_opt.threads, "worker count (0 = auto)");
  sweep->add_option("--cap", sweep_opt.deficiency_cap, "deficiency search cap");
  sweep->add_flag("--json", sweep_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // A graph source is part of the flag contract for these subcommands.
  for (const auto& [cmd, src] : {std::pair{check, &check_src},
                                 {defc, &def_src},
                                 {fac, &fac_src},
                                 {spect, &spect_src}}) {
    if (*cmd && !src->present()) {
      std::fprintf(stderr, "%s: one of --graph6 or --file is required\n",
                   cmd->get_name().c_str());
      return kExitUsage;
    }
  }

  try {
    if (*check)
      return run_check(check_src, thm, check_k, check_t, check_tol, check_cap,
                       check_json);
    if (*defc) return run_deficiency(def_src, def_k, def_cap, def_json);
    if (*fac) return run_factor(fac_src, fac_k, fac_cap, fac_json);
    if (*cat) return run_catalog(cat_k, cat_max_order, dot_dir);
    if (*ext) {
      try {
        return run_extremal(ext_kind, ext_n, ext_k, ext_t, ext_delta, ext_s,
                            ext_verify);
      } catch (const factor::Error& e) {
        if (e.kind() == factor::ErrorKind::InvalidParameters) {
          std::fprintf(stderr, "%s\n", e.what());
          return kExitUsage;
        }
        throw;
      }
    }
    if (*spect) return run_spectrum(spect_src, spect_tol);
    if (*sweep) return run_sweep_cmd(sweep_file, sweep_opt, sweep_json);
  } catch (const factor::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitInputError;
  }
  return kExitUsage;
}
