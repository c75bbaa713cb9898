#pragma once

// The acceptance suite behind `prm verify`.
//
// Levels nest: quick runs the small censuses and reduced property and
// sampling suites, full adds the GF(5) censuses and the full sample sizes,
// long adds the GF(4) quartic census.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prm {

enum class Level { Quick, Full, Long };

std::optional<Level> level_from_string(std::string_view name);
std::string to_string(Level level);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

using ProgressFn = std::function<void(const CriterionResult&)>;

std::vector<CriterionResult> run_acceptance(Level level, int workers = 0, const ProgressFn& progress = {});

}  // namespace prm
