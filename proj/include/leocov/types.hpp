#pragma once

#include <cstdint>
#include <optional>

// Core domain types shared by every module. Internal convention throughout the
// library: angles in radians, lengths in meters, powers in watts, ratios linear.
// Degrees / kilometers / dB / dBm exist only at the CLI boundary.

namespace leocov {

struct EarthModel {
  double radius_m = 6'371'000.0;
};

// One circular orbital shell: every satellite shares altitude and inclination.
struct ConstellationConfig {
  int n_act = 648;               // actual satellite count
  double altitude_m = 500e3;     // height above the mean Earth surface
  double inclination_rad = 0.0;  // in (0, pi/2]
  double min_elevation_rad = 0;  // lowest usable elevation above the horizon, in [0, pi/2]
};

struct UserLocation {
  double latitude_rad = 0.0;  // in [-pi/2, pi/2]
};

struct LinkBudget {
  double tx_power_w = 10.0;
  double noise_power_w = 1e-12;      // sigma^2; accepted in dBm at the CLI only
  double path_loss_exponent = 2.0;   // >= 2
  double rician_k = 100.0;           // >= 0; K=0 degenerates to Rayleigh power
};

// Satellite position, 3D Cartesian in meters, Earth-centered. Always lies on
// the sphere of radius earth.radius_m + cfg.altitude_m.
struct SatelliteState {
  double x = 0.0, y = 0.0, z = 0.0;
};

// How the analytic formulas resolve the real-valued satellite count N.
enum class NMode { actual, effective, explicit_n };

struct NSelection {
  NMode mode = NMode::effective;
  double explicit_value = 0.0;  // used only when mode == explicit_n
};

struct Scenario {
  ConstellationConfig cfg;
  EarthModel earth;
  LinkBudget lb;
  UserLocation user;
  NSelection n_mode;
};

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;
  // The inner gain integral of the rate is truncated at the (1 - gain_tail_mass)
  // quantile; must be in (0, 1e-4].
  double gain_tail_mass = 1e-10;
};

enum class Provenance { analytic, monte_carlo };

// A computed coverage probability or rate, with how it was obtained.
struct MetricResult {
  double value = 0.0;
  double error = 0.0;    // quadrature error estimate, or 95% confidence half-width
  double n_used = 0.0;   // the (possibly non-integer) N the computation used
  Provenance provenance = Provenance::analytic;
  bool converged = true; // false when the quadrature exhausted its subdivisions
};

struct MonteCarloSpec {
  long long trials = 100'000;
  std::uint64_t seed = 1;
  int workers = 1;
};

// Constellation realization drawn per trial (or fixed, for walker_delta).
struct GeneratorKind {
  enum class Family { uniform_shell, random_inclined, walker_delta };
  Family family = Family::random_inclined;
  // walker_delta only: planes * sats_per_plane must equal n_act.
  int planes = 0;
  int sats_per_plane = 0;
  int phasing = 0;
};

// All validators throw std::domain_error naming the violated condition.
void validate(const EarthModel& earth);
void validate(const ConstellationConfig& cfg);
void validate(const UserLocation& user);
void validate(const LinkBudget& lb);
void validate(const QuadratureSpec& q);
void validate(const MonteCarloSpec& mc);
void validate(const Scenario& s);
void validate(const GeneratorKind& kind, const ConstellationConfig& cfg);

}  // namespace leocov
