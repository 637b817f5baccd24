#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factor/factor_builder.hpp"
#include "factor/factor_theory.hpp"
#include "factor/verdict.hpp"

namespace factor {

struct SweepOptions {
  int k = 2;
  double tol = 1e-9;
  int deficiency_cap = kDeficiencyCap;
  int alpha_cap = kAlphaCap;
  int builder_cap = kFactorSearchCap;
  int threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  std::string graph6;
  std::string error;  // nonempty when the line failed to parse or exceeded caps
  int n = 0;
  long long m = 0;
  long long deficiency_value = 0;
  bool factor_exists = false;          // exact criterion
  std::optional<bool> builder_found;   // absent when over the builder cap
  bool builder_verified = false;       // certificate re-verification outcome
  ConditionVerdict t12;
  std::vector<ConditionVerdict> t13;   // one verdict per t in 1..k-1
  ConditionVerdict t14;
  ConditionVerdict t15;

  bool any_sufficient_holds() const;
  bool counterexample() const;  // some sufficient condition holds, no factor

  bool operator==(const SweepRow&) const = default;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int parse_errors = 0;
  int factor_count = 0;
  int holds12 = 0, holds13 = 0, holds14 = 0, holds15 = 0;
  int counterexamples = 0;      // must stay zero
  int builder_mismatches = 0;   // builder vs exact criterion, or bad certificate

  bool operator==(const SweepReport&) const = default;
};

// Evaluates every graph6 line independently (worker pool, results kept in
// input order) against the exact test, the builder, and conditions 12-15.
SweepReport run_sweep(const std::vector<std::string>& lines,
                      const SweepOptions& options);

}  // namespace factor
