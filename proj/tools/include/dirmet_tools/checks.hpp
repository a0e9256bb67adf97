#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dirmet/distances.hpp"

namespace dirmet::tools {

struct CheckContext {
  SearchBudget budget;
  double tol = kDistanceTolerance;
  std::uint64_t seed = 0;
};

/// Outcome of one verification check. `failures` holds replayable
/// instances (space documents plus the offending values).
struct CheckResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::string detail;
  nlohmann::json failures = nlohmann::json::array();
  /// Wall-clock budget in seconds; 0 for none. Not part of reports.
  double time_limit = 0.0;
  double seconds = 0.0;
};

CheckResult check_zigzag_axioms(const CheckContext& ctx);
CheckResult check_zigzag_above_base(const CheckContext& ctx);
CheckResult check_reversal(const CheckContext& ctx);
CheckResult check_inequality_chain(const CheckContext& ctx);
CheckResult check_source_sink(const CheckContext& ctx);
CheckResult check_directed_square(const CheckContext& ctx);
CheckResult check_torus_balls(const CheckContext& ctx);
CheckResult check_open_book(const CheckContext& ctx);
CheckResult check_disometry(const CheckContext& ctx);
CheckResult check_gh_oracle(const CheckContext& ctx);
CheckResult check_grid_oracle(const CheckContext& ctx);

/// "core", "distances", "examples" or "all".
bool is_suite(std::string_view name);
std::vector<std::string> suite_checks(std::string_view name);

/// Runs one check by id, timing it.
CheckResult run_check(std::string_view id, const CheckContext& ctx);

/// Deterministic report: no timings.
nlohmann::json suite_report(std::string_view suite, const CheckContext& ctx,
                            const std::vector<CheckResult>& results);

}  // namespace dirmet::tools
