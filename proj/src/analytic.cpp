#include "leocov/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "leocov/channel.hpp"
#include "leocov/distributions.hpp"
#include "leocov/geometry.hpp"
#include "leocov/quadrature.hpp"
#include "leocov/units.hpp"

namespace leocov {

double resolve_n(const Scenario& s) {
  validate(s);
  switch (s.n_mode.mode) {
    case NMode::actual:
      return static_cast<double>(s.cfg.n_act);
    case NMode::effective:
      return effective_satellite_count(s.cfg.n_act, s.cfg.inclination_rad,
                                       s.user.latitude_rad)
          .value;
    case NMode::explicit_n:
      return s.n_mode.explicit_value;
  }
  throw std::logic_error("unreachable n_mode");
}

double coverage_upper_bound(const Scenario& s) {
  const double n = resolve_n(s);
  const double pv = visibility_probability(s.cfg, s.earth);
  return 1.0 - std::pow(1.0 - pv, n);
}

MetricResult coverage_probability_linear(const Scenario& s, double threshold_linear,
                                         const QuadratureSpec& q) {
  validate(q);
  const double n = resolve_n(s);
  if (!(threshold_linear > 0.0))
    throw std::domain_error("coverage threshold must be positive");

  const double rmax = max_slant_range(s.cfg, s.earth);
  const DistanceDistribution dist{s.cfg, s.earth, n};
  const double noise_over_power = s.lb.noise_power_w / s.lb.tx_power_w;
  const double alpha = s.lb.path_loss_exponent;

  auto integrand = [&](double r) {
    const double g_needed = threshold_linear * noise_over_power * std::pow(r, alpha);
    return (1.0 - gain_cdf(s.lb, g_needed)) * serving_distance_pdf(dist, r);
  };
  const QuadResult res =
      integrate(integrand, s.cfg.altitude_m, rmax, q.rel_tol, q.abs_tol, q.max_subdivisions);

  MetricResult out;
  out.value = std::clamp(res.value, 0.0, 1.0);
  out.error = res.error_est;
  out.n_used = n;
  out.provenance = Provenance::analytic;
  out.converged = res.converged;
  return out;
}

MetricResult coverage_probability(const Scenario& s, double threshold_db,
                                  const QuadratureSpec& q) {
  return coverage_probability_linear(s, db_to_linear(threshold_db), q);
}

MetricResult average_rate(const Scenario& s, const QuadratureSpec& q) {
  validate(q);
  const double n = resolve_n(s);

  const double rmax = max_slant_range(s.cfg, s.earth);
  const DistanceDistribution dist{s.cfg, s.earth, n};
  const double power_over_noise = s.lb.tx_power_w / s.lb.noise_power_w;
  const double alpha = s.lb.path_loss_exponent;
  const double g_max = gain_quantile(s.lb, 1.0 - q.gain_tail_mass);
  constexpr double inv_ln2 = 1.4426950408889634;

  bool inner_converged = true;
  auto outer = [&](double r) {
    const double snr_per_gain = power_over_noise * std::pow(r, -alpha);
    auto inner = [&](double g) {
      return std::log1p(snr_per_gain * g) * gain_pdf(s.lb, g);
    };
    const QuadResult in =
        integrate(inner, 0.0, g_max, q.rel_tol, q.abs_tol, q.max_subdivisions);
    if (!in.converged) inner_converged = false;
    return in.value * serving_distance_pdf(dist, r);
  };
  const QuadResult res =
      integrate(outer, s.cfg.altitude_m, rmax, q.rel_tol, q.abs_tol, q.max_subdivisions);

  MetricResult out;
  out.value = std::max(res.value * inv_ln2, 0.0);
  out.error = res.error_est * inv_ln2;
  out.n_used = n;
  out.provenance = Provenance::analytic;
  out.converged = res.converged && inner_converged;
  return out;
}

const char* sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::threshold_db: return "threshold_db";
    case SweepVariable::tx_power: return "tx_power";
    case SweepVariable::n_act: return "n_act";
    case SweepVariable::altitude: return "altitude";
    case SweepVariable::min_elevation: return "min_elevation";
    case SweepVariable::inclination: return "inclination";
    case SweepVariable::user_latitude: return "user_latitude";
  }
  return "unknown";
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  if (spec.points < 2)
    throw std::invalid_argument("sweep needs a finite range with at least 2 points");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to))
    throw std::invalid_argument("sweep range must be finite");
  std::vector<double> grid(spec.points);
  const double step = (spec.to - spec.from) / (spec.points - 1);
  for (int i = 0; i < spec.points; ++i) grid[i] = spec.from + step * i;
  grid.back() = spec.to;  // exact endpoint regardless of rounding
  return grid;
}

Scenario apply_sweep_value(const Scenario& s, SweepVariable v, double value) {
  Scenario out = s;
  switch (v) {
    case SweepVariable::threshold_db: break;  // handled by the caller
    case SweepVariable::tx_power: out.lb.tx_power_w = value; break;
    case SweepVariable::n_act: out.cfg.n_act = static_cast<int>(std::llround(value)); break;
    case SweepVariable::altitude: out.cfg.altitude_m = value; break;
    case SweepVariable::min_elevation: out.cfg.min_elevation_rad = value; break;
    case SweepVariable::inclination: out.cfg.inclination_rad = value; break;
    case SweepVariable::user_latitude: out.user.latitude_rad = value; break;
  }
  return out;
}

std::vector<SweepRow> sweep(const Scenario& s, const SweepSpec& spec, const QuadratureSpec& q,
                            MetricKind kind, double threshold_db) {
  const std::vector<double> grid = sweep_grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double value : grid) {
    SweepRow row;
    row.value = value;
    const Scenario point = apply_sweep_value(s, spec.variable, value);
    const double t_db =
        spec.variable == SweepVariable::threshold_db ? value : threshold_db;
    try {
      Scenario actual = point;
      actual.n_mode = {NMode::actual, 0.0};
      Scenario effective = point;
      effective.n_mode = {NMode::effective, 0.0};
      row.n_eff_used = std::numeric_limits<double>::quiet_NaN();
      row.analytic_actual = kind == MetricKind::coverage
                                ? coverage_probability(actual, t_db, q)
                                : average_rate(actual, q);
      // The effective count can be singular while the actual-N column is fine;
      // record what failed and keep the row.
      row.n_eff_used = resolve_n(effective);
      row.analytic_effective = kind == MetricKind::coverage
                                   ? coverage_probability(effective, t_db, q)
                                   : average_rate(effective, q);
    } catch (const std::domain_error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace leocov
