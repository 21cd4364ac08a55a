#pragma once

#include <optional>
#include <utility>

#include "leocov/types.hpp"

// Distance and latitude distributions of the shell model, plus the
// effective-satellite-count correction that maps an inclined constellation
// onto an equivalent uniform shell at a given user latitude.

namespace leocov {

// A shell with a real-valued satellite count N (the uniform model accepts the
// non-integer effective count).
struct DistanceDistribution {
  ConstellationConfig cfg;
  EarthModel earth;
  double n = 1.0;  // > 0
};

// CDF of the distance from the user to one uniformly placed satellite:
// the spherical-cap share (r^2 - alt^2) / (4 re (re + alt)) on
// [alt, 2 re + alt], 0 below, 1 above.
double single_distance_cdf(const DistanceDistribution& d, double r);

// Density of the nearest of N such satellites.
double serving_distance_pdf(const DistanceDistribution& d, double r0);

// CDF of the nearest of N such satellites: 1 - (1 - F(r0))^N.
double serving_distance_cdf(const DistanceDistribution& d, double r0);

// Density of one satellite's latitude for an inclined circular orbit with a
// uniform argument of latitude: (sqrt(2)/pi) cos(phi) / sqrt(cos 2phi - cos 2i)
// on (-i, i); returns +infinity at |phi| = i (integrable endpoint), 0 beyond.
double satellite_latitude_pdf(double inclination_rad, double latitude_rad);

// Closed-form companion CDF: 1/2 + asin(sin(phi)/sin(i)) / pi, clamped.
double satellite_latitude_cdf(double inclination_rad, double latitude_rad);

struct EffectiveCount {
  double value = 0.0;
  double user_latitude_rad = 0.0;
  double inclination_rad = 0.0;
};

// Uniform-shell count whose satellite density at the user's latitude matches
// the inclined constellation's: (2 sqrt(2) / pi) N / sqrt(cos 2phi - cos 2i).
// Throws std::domain_error when |latitude| >= inclination (density singular).
EffectiveCount effective_satellite_count(double n_act, double inclination_rad,
                                         double user_latitude_rad);

// The pair of latitudes +/-phi* where the effective count equals the actual
// one; present only when the inclination reaches acos(1 - 8/pi^2)/2 (~39.54
// degrees). Below that the effective count exceeds the actual everywhere.
std::optional<std::pair<double, double>> matching_latitudes(double inclination_rad);

}  // namespace leocov
