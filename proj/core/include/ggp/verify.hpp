#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t cases_run = 0;
  std::vector<VerifyFailure> failures;
  std::optional<std::string> error;  // suite aborted, e.g. oracle range exceeded
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty() && !error; }
};

/// Bounds for a verification run. Unset fields fall back to each suite's
/// default sweep.
struct VerifyBounds {
  std::optional<unsigned> max_n;
  std::vector<std::uint64_t> q_values;
  unsigned jobs = 1;
};

/// Suite names in canonical order: partition, theta, duality, vanishing,
/// census, dimension, degree, multiplicity.
const std::vector<std::string>& suite_names();

/// Runs the selected suites ("all" expands to every suite). Unknown names
/// throw DomainError. Reports come back in canonical suite order whatever
/// the job count.
std::vector<VerifyReport> run_suites(const std::vector<std::string>& selection,
                                     const VerifyBounds& bounds);

}  // namespace ggp
