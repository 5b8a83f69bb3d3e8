#ifndef CDALG_REPRO_HPP
#define CDALG_REPRO_HPP

#include "cdalg/algebra.hpp"
#include "cdalg/io.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cdalg {

struct ReproOutcome {
  bool passed = false;
  std::string detail;  // residuals, witnesses, or the first failed check
};

/// One worked example, replayed as an independent deterministic check.
struct ReproCase {
  std::string id;       // R1..R10
  std::string locator;  // short slug naming the example
  std::string mode;     // "exact" or "tolerance"
  std::function<ReproOutcome(std::uint64_t seed)> run;
};

struct ReproResult {
  std::string id;
  std::string locator;
  std::string mode;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

const std::vector<ReproCase>& repro_cases();

/// Runs every case, or only `only`; results are ordered by case id. A case
/// that throws is reported as failed with the exception text.
std::vector<ReproResult> run_repro(std::uint64_t seed, const std::optional<std::string>& only = {});

std::string format_result_line(const ReproResult& result);
json results_to_json(const std::vector<ReproResult>& results, std::uint64_t seed);

/// The sedenion zero-divisor checks on an algebra built with the given basis
/// labelling; only the standard labelling passes.
ReproOutcome sedenion_zero_divisor_check(BasisConvention convention);

}  // namespace cdalg

#endif  // CDALG_REPRO_HPP
