#include "leocov/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace leocov {

namespace {
void validate(const DistanceDistribution& d) {
  leocov::validate(d.cfg);
  leocov::validate(d.earth);
  if (!(d.n > 0.0)) throw std::domain_error("distribution N must be positive");
}
}  // namespace

double single_distance_cdf(const DistanceDistribution& d, double r) {
  validate(d);
  const double alt = d.cfg.altitude_m;
  const double re = d.earth.radius_m;
  if (r <= alt) return 0.0;
  if (r >= 2.0 * re + alt) return 1.0;
  return (r * r - alt * alt) / (4.0 * re * (re + alt));
}

double serving_distance_pdf(const DistanceDistribution& d, double r0) {
  validate(d);
  const double alt = d.cfg.altitude_m;
  const double re = d.earth.radius_m;
  if (r0 < alt || r0 > 2.0 * re + alt) return 0.0;
  const double f_single = (r0 * r0 - alt * alt) / (4.0 * re * (re + alt));
  return d.n * std::pow(1.0 - f_single, d.n - 1.0) * r0 / (2.0 * re * (re + alt));
}

double serving_distance_cdf(const DistanceDistribution& d, double r0) {
  return 1.0 - std::pow(1.0 - single_distance_cdf(d, r0), d.n);
}

double satellite_latitude_pdf(double inclination_rad, double latitude_rad) {
  if (!(inclination_rad > 0.0 && inclination_rad <= std::numbers::pi / 2.0))
    throw std::domain_error("inclination must be in (0, pi/2]");
  const double a = std::abs(latitude_rad);
  if (a > inclination_rad) return 0.0;
  if (a == inclination_rad) return std::numeric_limits<double>::infinity();
  const double denom = std::cos(2.0 * latitude_rad) - std::cos(2.0 * inclination_rad);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();  // rounding at the edge
  return (std::sqrt(2.0) / std::numbers::pi) * std::cos(latitude_rad) / std::sqrt(denom);
}

double satellite_latitude_cdf(double inclination_rad, double latitude_rad) {
  if (!(inclination_rad > 0.0 && inclination_rad <= std::numbers::pi / 2.0))
    throw std::domain_error("inclination must be in (0, pi/2]");
  if (latitude_rad <= -inclination_rad) return 0.0;
  if (latitude_rad >= inclination_rad) return 1.0;
  const double s = std::sin(latitude_rad) / std::sin(inclination_rad);
  return 0.5 + std::asin(std::clamp(s, -1.0, 1.0)) / std::numbers::pi;
}

EffectiveCount effective_satellite_count(double n_act, double inclination_rad,
                                         double user_latitude_rad) {
  if (!(n_act >= 1.0)) throw std::domain_error("actual satellite count must be >= 1");
  if (!(inclination_rad > 0.0 && inclination_rad <= std::numbers::pi / 2.0))
    throw std::domain_error("inclination must be in (0, pi/2]");
  if (std::abs(user_latitude_rad) >= inclination_rad)
    throw std::domain_error(
        "effective satellite count is singular at |latitude| >= inclination");
  const double denom =
      std::cos(2.0 * user_latitude_rad) - std::cos(2.0 * inclination_rad);
  if (denom <= 0.0)
    throw std::domain_error(
        "effective satellite count is singular at |latitude| >= inclination");
  const double value = (2.0 * std::sqrt(2.0) / std::numbers::pi) * n_act / std::sqrt(denom);
  return {value, user_latitude_rad, inclination_rad};
}

std::optional<std::pair<double, double>> matching_latitudes(double inclination_rad) {
  if (!(inclination_rad > 0.0 && inclination_rad <= std::numbers::pi / 2.0))
    throw std::domain_error("inclination must be in (0, pi/2]");
  constexpr double pi_sq = std::numbers::pi * std::numbers::pi;
  const double arg = 8.0 / pi_sq + std::cos(2.0 * inclination_rad);
  // arg <= 1 exactly when the inclination reaches the crossing threshold
  // acos(1 - 8/pi^2)/2; above 1 the effective count never meets the actual.
  if (arg > 1.0) return std::nullopt;
  const double phi = 0.5 * std::acos(std::max(arg, -1.0));
  return std::make_pair(-phi, phi);
}

}  // namespace leocov
