#pragma once

#include <string>
#include <vector>

#include "fracguide/guide.hpp"
#include "fracguide/types.hpp"

namespace fracguide::verify {

struct CheckResult {
  std::string name;
  double worst = 0.0;      // largest observed error for the check
  double tolerance = 0.0;
  bool passed = false;
};

/// sqrt(|dE|^2 + |d etaH|^2) / scale.
double field_deviation(const FieldSample& a, const FieldSample& b, double scale);

/// Runs every oracle suite against `cfg`. Deterministic.
std::vector<CheckResult> run_verification(const guide::GuideConfig& cfg);

}  // namespace fracguide::verify
