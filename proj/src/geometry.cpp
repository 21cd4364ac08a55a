#include "leocov/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leocov {

namespace {
constexpr double half_pi = std::numbers::pi / 2.0;
}

double max_slant_range(const ConstellationConfig& cfg, const EarthModel& earth) {
  validate(cfg);
  validate(earth);
  const double x = cfg.altitude_m / earth.radius_m;
  const double s = std::sin(cfg.min_elevation_rad);
  return earth.radius_m * (std::sqrt(x * (x + 2.0) + s * s) - s);
}

double coverage_latitude_limit(const ConstellationConfig& cfg, const EarthModel& earth) {
  const double re = earth.radius_m;
  const double alt = cfg.altitude_m;
  const double rmax = max_slant_range(cfg, earth);
  double arg = (re * re + re * alt + (alt * alt - rmax * rmax) / 2.0) / (re * (re + alt));
  // In exact arithmetic arg is within [-1, 1] for every valid config; only
  // rounding can push it out.
  assert(arg >= -1.0 - 1e-12 && arg <= 1.0 + 1e-12);
  arg = std::clamp(arg, -1.0, 1.0);
  return std::min(cfg.inclination_rad + std::acos(arg), half_pi);
}

double min_altitude_for_global_coverage(double inclination_rad, double min_elevation_rad,
                                        const EarthModel& earth) {
  validate(earth);
  if (!(inclination_rad > min_elevation_rad))
    throw std::domain_error(
        "global coverage requires inclination > min elevation; no finite altitude works");
  const double alt =
      earth.radius_m * std::cos(min_elevation_rad) / std::sin(inclination_rad - min_elevation_rad) -
      earth.radius_m;
  return std::max(alt, 0.0);
}

double visibility_probability(const ConstellationConfig& cfg, const EarthModel& earth) {
  const double rmax = max_slant_range(cfg, earth);
  const double p =
      (cfg.altitude_m - rmax * std::sin(cfg.min_elevation_rad)) /
      (2.0 * (earth.radius_m + cfg.altitude_m));
  return std::clamp(p, 0.0, 1.0);
}

SatelliteState satellite_position_from_trig(double cos_u, double sin_u, double cos_raan,
                                            double sin_raan, const ConstellationConfig& cfg,
                                            const EarthModel& earth) {
  const double r = earth.radius_m + cfg.altitude_m;
  // In-plane point rotated by the inclination about the x axis; z points at
  // the south pole for U = 0 (ascending node at longitude 0).
  const double xp = r * cos_u * std::cos(cfg.inclination_rad);
  const double yp = r * sin_u;
  const double zp = -r * cos_u * std::sin(cfg.inclination_rad);
  // Node rotation about the polar axis.
  return {xp * cos_raan - yp * sin_raan, xp * sin_raan + yp * cos_raan, zp};
}

SatelliteState satellite_position(double argument_of_latitude_rad, double raan_rad,
                                  const ConstellationConfig& cfg, const EarthModel& earth) {
  validate(cfg);
  validate(earth);
  return satellite_position_from_trig(std::cos(argument_of_latitude_rad),
                                      std::sin(argument_of_latitude_rad), std::cos(raan_rad),
                                      std::sin(raan_rad), cfg, earth);
}

SatelliteState user_position(const UserLocation& user, const EarthModel& earth,
                             double longitude_rad) {
  const double c = std::cos(user.latitude_rad);
  return {earth.radius_m * c * std::cos(longitude_rad),
          earth.radius_m * c * std::sin(longitude_rad),
          earth.radius_m * std::sin(user.latitude_rad)};
}

double slant_range(const UserLocation& user, const SatelliteState& sat, const EarthModel& earth) {
  const SatelliteState u = user_position(user, earth);
  const double dx = sat.x - u.x, dy = sat.y - u.y, dz = sat.z - u.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double elevation_angle(const UserLocation& user, const SatelliteState& sat,
                       const EarthModel& earth) {
  const SatelliteState u = user_position(user, earth);
  const double dx = sat.x - u.x, dy = sat.y - u.y, dz = sat.z - u.z;
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  // Angle between the line of sight and the horizon plane whose normal is the
  // user's zenith direction u/|u|.
  const double along_zenith = (dx * u.x + dy * u.y + dz * u.z) / earth.radius_m;
  return std::asin(std::clamp(along_zenith / d, -1.0, 1.0));
}

}  // namespace leocov
