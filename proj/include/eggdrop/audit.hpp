#pragma once

#include "eggdrop/core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eggdrop {

struct AuditOptions {
  std::optional<Mode> mode;            // defaults per problem kind
  unsigned jobs = 1;
  bool force = false;                  // allow truth spaces above the cap
  std::optional<std::size_t> max_truths;  // overrides EGGDROP_MAX_TRUTHS / 10^6
};

struct TruthDrops {
  HiddenTruth truth;
  Int drops = 0;
  bool operator==(const TruthDrops&) const = default;
};

struct CorrectnessFailure {
  HiddenTruth truth;
  std::string message;
  bool operator==(const CorrectnessFailure&) const = default;
};

struct AuditReport {
  ProblemKind kind = ProblemKind::OneD;
  Region region;
  int eggs = 0;
  Mode mode = Mode::Lattice;
  std::size_t truths_checked = 0;
  Int max_drops = 0;
  std::optional<HiddenTruth> worst_truth;
  Int bound_value = 0;
  bool bound_compliant = true;
  Int recursive_bound = 0;
  bool recursive_bound_respected = true;
  std::vector<TruthDrops> exceedances;
  std::vector<CorrectnessFailure> correctness_failures;
  std::vector<TruthDrops> per_truth;  // every truth in enumeration order

  bool correct() const { return correctness_failures.empty(); }
};

std::size_t default_truth_cap();

// All hidden truths for the problem (for sum lines: the V grid {t, t - 1/2}).
std::vector<HiddenTruth> enumerate_truths(ProblemKind kind, const Region& r);

// Runs the strategy against every truth and checks each answer.
AuditReport audit_exhaustive(ProblemKind kind, const Region& r, int eggs, const AuditOptions& opts = {});

// Single run outcome used by audits; the answer is checked against ground truth.
struct RunResult {
  Int drops = 0;
  std::optional<std::string> failure;
  std::vector<Rational> probe_sums;
};
RunResult run_and_check(ProblemKind kind, const Region& r, int eggs, Mode mode, const HiddenTruth& truth);

}  // namespace eggdrop
