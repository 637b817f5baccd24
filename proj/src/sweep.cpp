#include "factor/sweep.hpp"

#include <atomic>
#include <thread>

#include "factor/graph6.hpp"
#include "factor/spectral.hpp"

namespace factor {

bool SweepRow::any_sufficient_holds() const {
  if (t12.applicable_and_holds() || t14.applicable_and_holds() ||
      t15.applicable_and_holds())
    return true;
  for (const auto& v : t13)
    if (v.applicable_and_holds()) return true;
  return false;
}

bool SweepRow::counterexample() const {
  return error.empty() && any_sufficient_holds() && !factor_exists;
}

namespace {

void evaluate_row(SweepRow& row, const SweepOptions& opt,
                  const TreeCatalog& catalog) {
  Graph g;
  try {
    g = parse_graph6(row.graph6);
  } catch (const Error& e) {
    row.error = e.what();
    return;
  }
  row.n = g.order();
  row.m = g.edge_count();
  try {
    DeficiencyReport report = deficiency(g, opt.k, opt.deficiency_cap);
    row.deficiency_value = report.value;
    row.factor_exists = report.value == 0;

    if (g.order() <= opt.builder_cap) {
      auto cert = find_factor(g, opt.k, catalog, opt.builder_cap);
      row.builder_found = cert.has_value();
      row.builder_verified =
          !cert || static_cast<bool>(verify_certificate(g, opt.k, *cert, catalog));
    }

    row.t12 = check_thm12(g, opt.k, opt.tol);
    for (int t = 1; t <= opt.k - 1; ++t)
      row.t13.push_back(check_thm13(g, opt.k, t, opt.alpha_cap));
    row.t14 = check_thm14(g, opt.k, opt.alpha_cap);
    row.t15 = check_thm15(g, opt.k, opt.alpha_cap);
  } catch (const Error& e) {
    row.error = e.what();
  }
}

}  // namespace

SweepReport run_sweep(const std::vector<std::string>& lines,
                      const SweepOptions& options) {
  SweepReport report;
  report.rows.resize(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    report.rows[i].graph6 = lines[i];

  const TreeCatalog catalog = enumerate_catalog(options.k, options.builder_cap);

  unsigned thread_count = options.threads > 0
                              ? static_cast<unsigned>(options.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(
      thread_count, std::max<std::size_t>(std::size_t{1}, lines.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < report.rows.size();
         i = next.fetch_add(1))
      evaluate_row(report.rows[i], options, catalog);
  };
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  for (const auto& row : report.rows) {
    if (!row.error.empty()) {
      ++report.parse_errors;
      continue;
    }
    if (row.factor_exists) ++report.factor_count;
    if (row.t12.applicable_and_holds()) ++report.holds12;
    for (const auto& v : row.t13)
      if (v.applicable_and_holds()) {
        ++report.holds13;
        break;
      }
    if (row.t14.applicable_and_holds()) ++report.holds14;
    if (row.t15.applicable_and_holds()) ++report.holds15;
    if (row.counterexample()) ++report.counterexamples;
    if (row.builder_found &&
        (*row.builder_found != row.factor_exists || !row.builder_verified))
      ++report.builder_mismatches;
  }
  return report;
}

}  // namespace factor
