#include "leocov/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "leocov/channel.hpp"
#include "leocov/geometry.hpp"
#include "leocov/units.hpp"

namespace leocov {

namespace {

constexpr double z95 = 1.959963984540054;  // 97.5% normal quantile

void fill_uniform_shell(const ConstellationConfig& cfg, const EarthModel& earth, Rng& rng,
                        std::vector<SatelliteState>& out) {
  const double r = earth.radius_m + cfg.altitude_m;
  for (auto& sat : out) {
    const double zt = 2.0 * rng.uniform() - 1.0;  // cos(polar angle), exactly uniform
    double ca, sa;
    rng.unit_circle(ca, sa);
    const double st = std::sqrt(std::max(0.0, 1.0 - zt * zt));
    sat = {r * st * ca, r * st * sa, r * zt};
  }
}

void fill_random_inclined(const ConstellationConfig& cfg, const EarthModel& earth, Rng& rng,
                          std::vector<SatelliteState>& out) {
  for (auto& sat : out) {
    double cu, su, co, so;
    rng.unit_circle(cu, su);  // argument of latitude
    rng.unit_circle(co, so);  // node angle
    sat = satellite_position_from_trig(cu, su, co, so, cfg, earth);
  }
}

void fill_walker_delta(const GeneratorKind& kind, const ConstellationConfig& cfg,
                       const EarthModel& earth, std::vector<SatelliteState>& out) {
  const double two_pi = 2.0 * std::numbers::pi;
  int idx = 0;
  for (int p = 0; p < kind.planes; ++p) {
    const double raan = two_pi * p / kind.planes;
    const double phase_offset =
        two_pi * kind.phasing * p / (static_cast<double>(kind.planes) * kind.sats_per_plane);
    for (int s = 0; s < kind.sats_per_plane; ++s) {
      const double u = two_pi * s / kind.sats_per_plane + phase_offset;
      out[idx++] = satellite_position(u, raan, cfg, earth);
    }
  }
}

struct Partial {
  long long covered = 0;
  long long visible = 0;
  double rate_sum = 0.0;
  double rate_sq_sum = 0.0;
  long long trials = 0;
};

// Nearest-satellite scan plus one link draw; the single code path shared by
// run_trial and the estimator workers.
TrialOutcome score_nearest(const std::vector<SatelliteState>& sats, const SatelliteState& upos,
                           const LinkBudget& lb, double r_max, Rng& rng) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& sat : sats) {
    const double dx = sat.x - upos.x, dy = sat.y - upos.y, dz = sat.z - upos.z;
    const double dsq = dx * dx + dy * dy + dz * dz;
    if (dsq < best) best = dsq;  // strict: the lowest index keeps exact ties
  }
  const double d = std::sqrt(best);

  TrialOutcome out;
  if (d <= r_max) {
    out.serving_distance_m = d;
    out.snr_linear = snr(lb, sample_gain(lb, rng), d, r_max);
    out.rate_bits = std::log2(1.0 + out.snr_linear);
  }
  return out;
}

struct WorkerPlan {
  const GeneratorKind& kind;
  const ConstellationConfig& cfg;
  const LinkBudget& lb;
  const UserLocation& user;
  const EarthModel& earth;
  const MonteCarloSpec& mc;
  double threshold_linear;
  double r_max;
  const std::vector<SatelliteState>* fixed_sats;  // walker_delta geometry, else null
};

long long trials_for_worker(const MonteCarloSpec& mc, int w) {
  const long long base = mc.trials / mc.workers;
  return base + (w < mc.trials % mc.workers ? 1 : 0);
}

Partial run_worker(const WorkerPlan& plan, int w) {
  Rng rng(plan.mc.seed, static_cast<std::uint64_t>(w));
  const bool walker = plan.kind.family == GeneratorKind::Family::walker_delta;
  std::vector<SatelliteState> scratch;
  if (!walker) scratch.resize(static_cast<size_t>(plan.cfg.n_act));

  Partial part;
  part.trials = trials_for_worker(plan.mc, w);
  for (long long t = 0; t < part.trials; ++t) {
    SatelliteState upos;
    const std::vector<SatelliteState>* sats;
    if (walker) {
      // Fixed geometry; the user's longitude is the randomized phase.
      const double lon = 2.0 * std::numbers::pi * rng.uniform();
      upos = user_position(plan.user, plan.earth, lon);
      sats = plan.fixed_sats;
    } else {
      generate_into(plan.kind, plan.cfg, plan.earth, rng, scratch);
      upos = user_position(plan.user, plan.earth, 0.0);
      sats = &scratch;
    }
    const TrialOutcome outcome = score_nearest(*sats, upos, plan.lb, plan.r_max, rng);
    part.covered += outcome.covered(plan.threshold_linear) ? 1 : 0;
    part.visible += outcome.serving_distance_m.has_value() ? 1 : 0;
    part.rate_sum += outcome.rate_bits;
    part.rate_sq_sum += outcome.rate_bits * outcome.rate_bits;
  }
  return part;
}

EstimateResult merge(const std::vector<Partial>& parts, const ConstellationConfig& cfg) {
  Partial total;
  for (const auto& p : parts) {  // fixed worker order keeps the sums deterministic
    total.covered += p.covered;
    total.visible += p.visible;
    total.rate_sum += p.rate_sum;
    total.rate_sq_sum += p.rate_sq_sum;
    total.trials += p.trials;
  }
  const double n = static_cast<double>(total.trials);

  EstimateResult out;
  out.trials = total.trials;

  const double p_cov = static_cast<double>(total.covered) / n;
  out.coverage = {p_cov, z95 * std::sqrt(p_cov * (1.0 - p_cov) / n),
                  static_cast<double>(cfg.n_act), Provenance::monte_carlo, true};

  const double mean_rate = total.rate_sum / n;
  double rate_hw = 0.0;
  if (total.trials > 1) {
    const double var =
        std::max(0.0, (total.rate_sq_sum - n * mean_rate * mean_rate) / (n - 1.0));
    rate_hw = z95 * std::sqrt(var / n);
  }
  out.rate = {mean_rate, rate_hw, static_cast<double>(cfg.n_act), Provenance::monte_carlo, true};

  const double p_vis = static_cast<double>(total.visible) / n;
  out.visible_fraction = p_vis;
  out.visible_halfwidth = z95 * std::sqrt(p_vis * (1.0 - p_vis) / n);
  return out;
}

WorkerPlan make_plan(const GeneratorKind& kind, const ConstellationConfig& cfg,
                     const LinkBudget& lb, const UserLocation& user, const EarthModel& earth,
                     const MonteCarloSpec& mc, double threshold_db,
                     const std::vector<SatelliteState>* fixed_sats) {
  return {kind,          cfg, lb, user, earth, mc, db_to_linear(threshold_db),
          max_slant_range(cfg, earth), fixed_sats};
}

}  // namespace

void generate_into(const GeneratorKind& kind, const ConstellationConfig& cfg,
                   const EarthModel& earth, Rng& rng, std::vector<SatelliteState>& out) {
  validate(cfg);
  validate(earth);
  validate(kind, cfg);
  out.resize(static_cast<size_t>(cfg.n_act));
  switch (kind.family) {
    case GeneratorKind::Family::uniform_shell:
      fill_uniform_shell(cfg, earth, rng, out);
      break;
    case GeneratorKind::Family::random_inclined:
      fill_random_inclined(cfg, earth, rng, out);
      break;
    case GeneratorKind::Family::walker_delta:
      fill_walker_delta(kind, cfg, earth, out);
      break;
  }
}

std::vector<SatelliteState> generate(const GeneratorKind& kind, const ConstellationConfig& cfg,
                                     const EarthModel& earth, Rng& rng) {
  std::vector<SatelliteState> out;
  generate_into(kind, cfg, earth, rng, out);
  return out;
}

TrialOutcome run_trial(const std::vector<SatelliteState>& sats, const UserLocation& user,
                       const ConstellationConfig& cfg, const LinkBudget& lb,
                       const EarthModel& earth, Rng& rng, double user_longitude_rad) {
  if (sats.empty()) throw std::domain_error("run_trial needs a nonempty satellite list");
  validate(user);
  validate(lb);
  const double r_max = max_slant_range(cfg, earth);
  const SatelliteState upos = user_position(user, earth, user_longitude_rad);
  return score_nearest(sats, upos, lb, r_max, rng);
}

EstimateResult estimate(const GeneratorKind& kind, const ConstellationConfig& cfg,
                        const LinkBudget& lb, const UserLocation& user, const EarthModel& earth,
                        const MonteCarloSpec& mc, double threshold_db) {
  validate(cfg);
  validate(earth);
  validate(lb);
  validate(user);
  validate(mc);
  validate(kind, cfg);

  std::vector<SatelliteState> fixed;
  if (kind.family == GeneratorKind::Family::walker_delta) {
    Rng unused(0, 0);
    generate_into(kind, cfg, earth, unused, fixed);
  }
  const WorkerPlan plan = make_plan(kind, cfg, lb, user, earth, mc, threshold_db,
                                    fixed.empty() ? nullptr : &fixed);

  std::vector<Partial> parts(static_cast<size_t>(mc.workers));
#pragma omp parallel for schedule(dynamic, 1)
  for (int w = 0; w < mc.workers; ++w) parts[w] = run_worker(plan, w);
  return merge(parts, cfg);
}

EstimateResult estimate_serial(const GeneratorKind& kind, const ConstellationConfig& cfg,
                               const LinkBudget& lb, const UserLocation& user,
                               const EarthModel& earth, const MonteCarloSpec& mc,
                               double threshold_db) {
  validate(cfg);
  validate(earth);
  validate(lb);
  validate(user);
  validate(mc);
  validate(kind, cfg);

  std::vector<SatelliteState> fixed;
  if (kind.family == GeneratorKind::Family::walker_delta) {
    Rng unused(0, 0);
    generate_into(kind, cfg, earth, unused, fixed);
  }
  const WorkerPlan plan = make_plan(kind, cfg, lb, user, earth, mc, threshold_db,
                                    fixed.empty() ? nullptr : &fixed);

  std::vector<Partial> parts(static_cast<size_t>(mc.workers));
  for (int w = 0; w < mc.workers; ++w) parts[w] = run_worker(plan, w);
  return merge(parts, cfg);
}

std::vector<double> sample_nearest_distances(const GeneratorKind& kind,
                                             const ConstellationConfig& cfg,
                                             const EarthModel& earth, const UserLocation& user,
                                             const MonteCarloSpec& mc) {
  validate(cfg);
  validate(earth);
  validate(user);
  validate(mc);
  validate(kind, cfg);

  std::vector<SatelliteState> fixed;
  const bool walker = kind.family == GeneratorKind::Family::walker_delta;
  if (walker) {
    Rng unused(0, 0);
    generate_into(kind, cfg, earth, unused, fixed);
  }

  std::vector<std::vector<double>> per_worker(static_cast<size_t>(mc.workers));
#pragma omp parallel for schedule(dynamic, 1)
  for (int w = 0; w < mc.workers; ++w) {
    Rng rng(mc.seed, static_cast<std::uint64_t>(w));
    std::vector<SatelliteState> scratch;
    if (!walker) scratch.resize(static_cast<size_t>(cfg.n_act));
    const long long n = trials_for_worker(mc, w);
    auto& sink = per_worker[w];
    sink.reserve(static_cast<size_t>(n));
    for (long long t = 0; t < n; ++t) {
      SatelliteState upos;
      const std::vector<SatelliteState>* sats;
      if (walker) {
        const double lon = 2.0 * std::numbers::pi * rng.uniform();
        upos = user_position(user, earth, lon);
        sats = &fixed;
      } else {
        generate_into(kind, cfg, earth, rng, scratch);
        upos = user_position(user, earth, 0.0);
        sats = &scratch;
      }
      double best = std::numeric_limits<double>::infinity();
      for (const auto& sat : *sats) {
        const double dx = sat.x - upos.x, dy = sat.y - upos.y, dz = sat.z - upos.z;
        const double dsq = dx * dx + dy * dy + dz * dz;
        if (dsq < best) best = dsq;
      }
      sink.push_back(std::sqrt(best));
    }
  }

  std::vector<double> out;
  out.reserve(static_cast<size_t>(mc.trials));
  for (const auto& chunk : per_worker) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace leocov
