#pragma once

#include <string>
#include <vector>

#include "zforge/numeric/context.hpp"

namespace zforge::suite {

enum class Level { Quick, Full };

struct Detail {
  std::string label;
  bool pass = false;
  /// Measured quantity, e.g. "log10|res| = -103.2".
  std::string value;
};

struct CheckResult {
  /// Identity name at the quick level, "criterion-N" at the full level.
  std::string id;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  /// 0 when the check has no runtime budget.
  double budget_seconds = 0.0;
  std::vector<Detail> details;
};

/// Quick: the printed-anchored identity set verified at ctx, ordered by
/// name. Full: acceptance criteria 1..11, each at its own pinned precision
/// (ctx is not used). `threads` = 0 uses hardware concurrency.
std::vector<CheckResult> run(Level level, const numeric::PrecisionContext& ctx, unsigned threads = 0);

/// Single criterion, 1..11.
CheckResult run_criterion(int number, unsigned threads = 0);

Level level_from_name(const std::string& name);
std::string level_name(Level level);

std::string to_json(const std::vector<CheckResult>& results);

}  // namespace zforge::suite
