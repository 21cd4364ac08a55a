#include "leocov/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "leocov/special_functions.hpp"

namespace leocov {

double snr(const LinkBudget& lb, double gain, double distance_m, double r_max_m) {
  validate(lb);
  if (gain < 0.0) throw std::domain_error("gain must be nonnegative");
  if (distance_m > r_max_m) return 0.0;
  return lb.tx_power_w * gain * std::pow(distance_m, -lb.path_loss_exponent) /
         lb.noise_power_w;
}

double gain_cdf(const LinkBudget& lb, double g) {
  validate(lb);
  if (g <= 0.0) return 0.0;
  return 1.0 - marcum_q1(std::sqrt(2.0 * lb.rician_k), std::sqrt(g));
}

double gain_pdf(const LinkBudget& lb, double g) {
  validate(lb);
  if (g < 0.0) return 0.0;
  const double rg = std::sqrt(g);
  const double rk = std::sqrt(2.0 * lb.rician_k);
  // (1/2) e^{-(g+2K)/2} I0(rk*rg) = (1/2) [e^{-x} I0(x)] e^{-(rg-rk)^2/2}.
  const double d = rg - rk;
  const double log_gauss = -d * d / 2.0;
  if (log_gauss < -745.0) return 0.0;
  const double x = rk * rg;
  const double scaled_i0 = x > 0.0 ? bessel_i0_scaled(x) : 1.0;
  return 0.5 * scaled_i0 * std::exp(log_gauss);
}

double gain_quantile(const LinkBudget& lb, double p) {
  validate(lb);
  if (p < 0.0 || p >= 1.0) throw std::domain_error("quantile level must be in [0, 1)");
  if (p == 0.0) return 0.0;
  const double mean = 2.0 * lb.rician_k + 2.0;
  const double sd = std::sqrt(4.0 + 8.0 * lb.rician_k);
  double hi = mean + 20.0 * sd;
  while (gain_cdf(lb, hi) < p) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (gain_cdf(lb, mid) < p ? lo : hi) = mid;
  }
  return hi;
}

double sample_gain(const LinkBudget& lb, Rng& rng) {
  const auto [z1, z2] = rng.normal_pair();
  const double line = z1 + std::sqrt(2.0 * lb.rician_k);
  return line * line + z2 * z2;
}

}  // namespace leocov
