#pragma once

#include "leocov/types.hpp"

// Spherical geometry of the Earth-shell system: slant ranges, visibility
// limits, latitude bounds, and the orbit-plane coordinate transform.

namespace leocov {

// Largest user-satellite distance at which the satellite still sits at or
// above the minimum elevation angle. Always in [altitude, tangent length].
double max_slant_range(const ConstellationConfig& cfg, const EarthModel& earth);

// Highest |user latitude| from which some point of the shell reachable by the
// constellation is within max_slant_range; clamped to pi/2 (global coverage).
double coverage_latitude_limit(const ConstellationConfig& cfg, const EarthModel& earth);

// Smallest shell altitude for which coverage_latitude_limit reaches the pole.
// Negative formula values are clamped to 0. Throws std::domain_error when
// inclination <= min elevation (no finite altitude works).
double min_altitude_for_global_coverage(double inclination_rad, double min_elevation_rad,
                                        const EarthModel& earth);

// Probability that one satellite placed uniformly on the shell is visible
// (elevation >= min elevation) from a user under the shell's coverage band.
double visibility_probability(const ConstellationConfig& cfg, const EarthModel& earth);

// Position on the shell for an argument of latitude U along an inclined
// circular orbit whose ascending node is rotated by raan about the polar
// axis. With raan = 0, latitude(U) = -asin(cos U * sin inclination).
SatelliteState satellite_position(double argument_of_latitude_rad, double raan_rad,
                                  const ConstellationConfig& cfg, const EarthModel& earth);

// Same rotation, taking precomputed (cos, sin) pairs for the two angles.
// Generators draw angles as unit vectors, so this is the shared kernel.
SatelliteState satellite_position_from_trig(double cos_u, double sin_u, double cos_raan,
                                            double sin_raan, const ConstellationConfig& cfg,
                                            const EarthModel& earth);

// Surface point of a user at the given latitude and longitude.
SatelliteState user_position(const UserLocation& user, const EarthModel& earth,
                             double longitude_rad = 0.0);

// Euclidean user-satellite distance; in [altitude, 2*earth_radius + altitude]
// for on-shell satellites. The user sits at longitude 0 (the shell statistics
// are rotation-invariant about the polar axis).
double slant_range(const UserLocation& user, const SatelliteState& sat, const EarthModel& earth);

// Elevation of the satellite above the user's local horizon plane. Used to
// cross-check the angular and metric visibility definitions.
double elevation_angle(const UserLocation& user, const SatelliteState& sat,
                       const EarthModel& earth);

}  // namespace leocov
