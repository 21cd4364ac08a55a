#include "leocov/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leocov {

namespace {
constexpr double half_pi = std::numbers::pi / 2.0;

[[noreturn]] void fail(const std::string& what) { throw std::domain_error(what); }

void require(bool ok, const char* what) {
  if (!ok) fail(what);
}
}  // namespace

void validate(const EarthModel& earth) {
  require(earth.radius_m > 0.0, "earth radius must be positive");
}

void validate(const ConstellationConfig& cfg) {
  require(cfg.n_act >= 1, "satellite count must be a positive integer");
  require(cfg.altitude_m > 0.0, "altitude must be positive");
  require(cfg.inclination_rad > 0.0 && cfg.inclination_rad <= half_pi,
          "inclination must be in (0, pi/2]");
  require(cfg.min_elevation_rad >= 0.0 && cfg.min_elevation_rad <= half_pi,
          "min elevation must be in [0, pi/2]");
}

void validate(const UserLocation& user) {
  require(std::abs(user.latitude_rad) <= half_pi, "user latitude must be in [-pi/2, pi/2]");
}

void validate(const LinkBudget& lb) {
  require(lb.tx_power_w > 0.0, "tx power must be positive");
  require(lb.noise_power_w > 0.0, "noise power must be positive");
  require(lb.path_loss_exponent >= 2.0, "path loss exponent must be >= 2");
  require(lb.rician_k >= 0.0, "Rician K must be nonnegative");
}

void validate(const QuadratureSpec& q) {
  require(q.rel_tol > 0.0 && q.abs_tol > 0.0, "quadrature tolerances must be positive");
  require(q.max_subdivisions >= 1, "max subdivisions must be >= 1");
  require(q.gain_tail_mass > 0.0 && q.gain_tail_mass <= 1e-4,
          "gain tail mass must be in (0, 1e-4]");
}

void validate(const MonteCarloSpec& mc) {
  require(mc.trials >= 1, "trial count must be >= 1");
  require(mc.workers >= 1, "worker count must be >= 1");
}

void validate(const Scenario& s) {
  validate(s.cfg);
  validate(s.earth);
  validate(s.lb);
  validate(s.user);
  if (s.n_mode.mode == NMode::explicit_n)
    require(s.n_mode.explicit_value > 0.0, "explicit N must be positive");
  // The effective-N singularity at |latitude| >= inclination surfaces when the
  // count is actually resolved, so a scenario carrying n_mode=effective stays
  // constructible for sweeps that move the latitude across the boundary.
}

void validate(const GeneratorKind& kind, const ConstellationConfig& cfg) {
  if (kind.family != GeneratorKind::Family::walker_delta) return;
  require(kind.planes >= 1 && kind.sats_per_plane >= 1,
          "walker planes and sats per plane must be >= 1");
  require(kind.phasing >= 0, "walker phasing must be nonnegative");
  require(static_cast<long long>(kind.planes) * kind.sats_per_plane == cfg.n_act,
          "walker planes * sats_per_plane must equal the satellite count");
}

}  // namespace leocov
