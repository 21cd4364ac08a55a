#pragma once

#include <optional>
#include <vector>

#include "leocov/rng.hpp"
#include "leocov/types.hpp"

// Monte Carlo estimator over explicitly generated constellations. Every trial
// redraws the randomized parts (fresh satellite set for uniform_shell /
// random_inclined, fresh user longitude for the fixed walker_delta geometry)
// and a fresh channel gain, so estimates average over constellation phase.
//
// Reproducibility contract: worker w draws from the substream (seed, w),
// workers own disjoint trial blocks, and partial results merge in worker
// order. Identical (trials, seed, workers) gives bit-identical estimates no
// matter how many threads actually run.

namespace leocov {

struct TrialOutcome {
  // Present exactly when the nearest satellite is within max_slant_range.
  std::optional<double> serving_distance_m;
  double snr_linear = 0.0;  // 0 when no satellite is visible
  double rate_bits = 0.0;   // log2(1 + snr)
  bool covered(double threshold_linear) const { return snr_linear > threshold_linear; }
};

struct EstimateResult {
  MetricResult coverage;
  MetricResult rate;
  double visible_fraction = 0.0;  // trials with at least one visible satellite
  double visible_halfwidth = 0.0;
  long long trials = 0;
};

// Draws one constellation realization: exactly n_act states on the shell.
// walker_delta is deterministic and consumes no randomness.
std::vector<SatelliteState> generate(const GeneratorKind& kind, const ConstellationConfig& cfg,
                                     const EarthModel& earth, Rng& rng);

// Same, into a caller-owned buffer (resized to n_act); the per-trial path.
void generate_into(const GeneratorKind& kind, const ConstellationConfig& cfg,
                   const EarthModel& earth, Rng& rng, std::vector<SatelliteState>& out);

// Associates the user with the nearest satellite (ties break to the lowest
// index) and scores one link draw. Draws one gain sample only when the
// nearest satellite is visible. user_longitude_rad rotates the user, used by
// the walker_delta per-trial longitude redraw.
TrialOutcome run_trial(const std::vector<SatelliteState>& sats, const UserLocation& user,
                       const ConstellationConfig& cfg, const LinkBudget& lb,
                       const EarthModel& earth, Rng& rng, double user_longitude_rad = 0.0);

// Coverage fraction at the threshold and mean rate over mc.trials trials,
// with 95% normal-approximation half-widths. OpenMP-parallel over workers.
EstimateResult estimate(const GeneratorKind& kind, const ConstellationConfig& cfg,
                        const LinkBudget& lb, const UserLocation& user, const EarthModel& earth,
                        const MonteCarloSpec& mc, double threshold_db);

// Same computation run strictly serially; the reference the parallel path is
// tested (and benchmarked) against. Bit-identical to estimate().
EstimateResult estimate_serial(const GeneratorKind& kind, const ConstellationConfig& cfg,
                               const LinkBudget& lb, const UserLocation& user,
                               const EarthModel& earth, const MonteCarloSpec& mc,
                               double threshold_db);

// Unconditional nearest-satellite distance per trial (even beyond the
// visibility range), in trial order; feeds the distribution goodness-of-fit
// tests. Uses the same substream layout as estimate().
std::vector<double> sample_nearest_distances(const GeneratorKind& kind,
                                             const ConstellationConfig& cfg,
                                             const EarthModel& earth, const UserLocation& user,
                                             const MonteCarloSpec& mc);

}  // namespace leocov
