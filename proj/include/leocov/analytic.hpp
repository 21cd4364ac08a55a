#pragma once

#include <string>
#include <vector>

#include "leocov/types.hpp"

// Closed-form shell-model metrics: coverage probability (the serving-distance
// integral of the gain tail), its visibility upper bound, and the average
// rate (double integral over serving distance and gain), all for real-valued
// satellite counts.

namespace leocov {

// The N the scenario's n_mode selects: the actual count, the effective count
// at the user's latitude (throws std::domain_error when singular), or an
// explicit positive real.
double resolve_n(const Scenario& s);

// 1 - (1 - P_V)^N: coverage in the threshold -> 0 limit, and an upper bound
// for every positive threshold.
double coverage_upper_bound(const Scenario& s);

// P(SNR > t) for a linear threshold t > 0.
MetricResult coverage_probability_linear(const Scenario& s, double threshold_linear,
                                         const QuadratureSpec& q);

// Same, threshold in dB (the external convention).
MetricResult coverage_probability(const Scenario& s, double threshold_db,
                                  const QuadratureSpec& q);

// E[log2(1 + SNR)] in bits/s/Hz. The inner gain integral is truncated at the
// (1 - gain_tail_mass) quantile; the discarded tail is bounded by the tail
// mass times the largest log term, far below the quadrature tolerance.
MetricResult average_rate(const Scenario& s, const QuadratureSpec& q);

enum class SweepVariable {
  threshold_db,
  tx_power,
  n_act,
  altitude,
  min_elevation,
  inclination,
  user_latitude
};

// Inclusive linear grid with at least two points. Values are in internal
// units (meters, radians, watts, dB for the threshold axis).
struct SweepSpec {
  SweepVariable variable = SweepVariable::threshold_db;
  double from = 0.0;
  double to = 0.0;
  int points = 0;
};

enum class MetricKind { coverage, rate };

struct SweepRow {
  double value = 0.0;  // grid value, internal units
  MetricResult analytic_actual;
  MetricResult analytic_effective;
  double n_eff_used = 0.0;  // NaN when the effective count is singular
  std::string error;        // empty on clean rows
};

const char* sweep_variable_name(SweepVariable v);

// The grid itself (exposed so callers can attach Monte Carlo columns later).
std::vector<double> sweep_grid(const SweepSpec& spec);

// Scenario with the sweep variable replaced by the given value (n_act rounds
// to the nearest integer).
Scenario apply_sweep_value(const Scenario& s, SweepVariable v, double value);

// One row per grid point, rows independent; per-row failures (e.g. the
// effective-count singularity) land in the row's error field and the sweep
// continues. threshold_db only matters for MetricKind::coverage.
std::vector<SweepRow> sweep(const Scenario& s, const SweepSpec& spec, const QuadratureSpec& q,
                            MetricKind kind, double threshold_db);

}  // namespace leocov
