#pragma once

// Shared fixtures and statistics helpers for the test suite.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "leocov/types.hpp"
#include "leocov/units.hpp"

namespace support {

// The simulation defaults used across the test scenarios: 500 km shell at 70
// degrees inclination, 10 degree mask, 10 W / -93 dBm / alpha 2 / K 100 link,
// equatorial user.
inline leocov::Scenario default_scenario(int n_act = 648) {
  leocov::Scenario s;
  s.cfg = {n_act, 500e3, leocov::deg_to_rad(70.0), leocov::deg_to_rad(10.0)};
  s.lb = {10.0, leocov::dbm_to_watts(-93.0), 2.0, 100.0};
  s.user = {0.0};
  s.n_mode = {leocov::NMode::effective, 0.0};
  return s;
}

// Kolmogorov-Smirnov statistic of a sample against a continuous CDF.
// Sorts a copy of the sample.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

}  // namespace support
