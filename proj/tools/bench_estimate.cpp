// Times the parallel Monte Carlo estimator against the serial reference on
// one inclined-shell scenario and checks the two agree bit for bit.
//
// usage: bench_estimate [trials] [workers]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "leocov/simulator.hpp"
#include "leocov/types.hpp"
#include "leocov/units.hpp"

using namespace leocov;

namespace {

bool bits_equal(double a, double b) {
  std::uint64_t ua, ub;
  std::memcpy(&ua, &a, sizeof a);
  std::memcpy(&ub, &b, sizeof b);
  return ua == ub;
}

bool bits_equal(const EstimateResult& a, const EstimateResult& b) {
  return bits_equal(a.coverage.value, b.coverage.value) &&
         bits_equal(a.coverage.error, b.coverage.error) &&
         bits_equal(a.rate.value, b.rate.value) && bits_equal(a.rate.error, b.rate.error) &&
         bits_equal(a.visible_fraction, b.visible_fraction) &&
         bits_equal(a.visible_halfwidth, b.visible_halfwidth) && a.trials == b.trials;
}

template <typename F>
double time_seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long long trials = 200'000;
  int workers = 4;
#ifdef _OPENMP
  workers = omp_get_max_threads();
#endif
  if (argc > 1) trials = std::atoll(argv[1]);
  if (argc > 2) workers = std::atoi(argv[2]);
  if (trials <= 0 || workers <= 0) {
    std::fprintf(stderr, "usage: %s [trials > 0] [workers > 0]\n", argv[0]);
    return 1;
  }

  ConstellationConfig cfg{648, km_to_m(500.0), deg_to_rad(70.0), deg_to_rad(10.0)};
  EarthModel earth;
  LinkBudget lb{10.0, dbm_to_watts(-93.0), 2.0, 100.0};
  UserLocation user{deg_to_rad(25.0)};
  GeneratorKind kind{GeneratorKind::Family::random_inclined, 0, 0, 0};
  MonteCarloSpec mc{trials, 20'260'814ULL, workers};
  const double threshold_db = 10.0;

#ifdef _OPENMP
  std::printf("openmp: yes, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: no (parallel path runs on one thread)\n");
#endif
  std::printf("scenario: 648 sats, 500 km, 70 deg inclination, 10 deg mask, user at 25 deg\n");
  std::printf("trials %lld, workers %d\n\n", trials, workers);

  EstimateResult serial, parallel;
  const double t_serial = time_seconds([&] {
    serial = estimate_serial(kind, cfg, lb, user, earth, mc, threshold_db);
  });
  const double t_parallel = time_seconds([&] {
    parallel = estimate(kind, cfg, lb, user, earth, mc, threshold_db);
  });

  std::printf("serial   : %8.3f s  (%.0f trials/s)\n", t_serial, trials / t_serial);
  std::printf("parallel : %8.3f s  (%.0f trials/s)\n", t_parallel, trials / t_parallel);
  std::printf("speedup  : %8.2fx\n\n", t_serial / t_parallel);
  std::printf("coverage %.15g +- %.15g, rate %.15g +- %.15g, visible %.15g\n",
              parallel.coverage.value, parallel.coverage.error, parallel.rate.value,
              parallel.rate.error, parallel.visible_fraction);

  if (!bits_equal(serial, parallel)) {
    std::fprintf(stderr, "mismatch: parallel and serial results differ\n");
    return 1;
  }
  std::printf("parallel result is bit-identical to the serial reference\n");
  return 0;
}
