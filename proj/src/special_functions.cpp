#include "leocov/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leocov {

namespace {

// Below this the Taylor series converges fast with all-positive terms; above,
// the asymptotic expansion's optimal truncation error is ~e^{-2x} < 2e-14.
constexpr double series_cutoff = 16.0;

double i0_series(double x) {
  const double q = x * x / 4.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double i0_scaled_asymptotic(double x) {
  // e^{-x} I0(x) ~ (2*pi*x)^{-1/2} * sum_k ((2k-1)!!)^2 / (k! (8x)^k),
  // summed to its smallest term.
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * x * k);
    if (next >= term) break;  // divergent tail reached
    term = next;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_i0_scaled(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0_scaled requires x >= 0");
  if (x <= series_cutoff) return i0_series(x) * std::exp(-x);
  return i0_scaled_asymptotic(x);
}

double bessel_i0(double x) {
  if (x < 0.0) throw std::domain_error("bessel_i0 requires x >= 0");
  if (x <= series_cutoff) return i0_series(x);
  const double log_value = x + std::log(i0_scaled_asymptotic(x));
  if (log_value > 709.0) throw std::overflow_error("bessel_i0 overflows for this argument");
  return std::exp(log_value);
}

std::vector<double> bessel_ik_scaled_array(double x, int k_max) {
  if (!(x > 0.0)) throw std::domain_error("bessel_ik_scaled_array requires x > 0");
  if (k_max < 0) throw std::domain_error("bessel_ik_scaled_array requires k_max >= 0");
  // Orders above ~sqrt(90x) are below 1e-19 relative to I0; starting the
  // backward recurrence well past both that and k_max makes the seed error
  // wash out before the orders we keep.
  const int tail = static_cast<int>(std::ceil(std::sqrt(90.0 * x))) + 40;
  const int start = k_max + tail;

  std::vector<double> f(static_cast<size_t>(start) + 2, 0.0);
  f[start + 1] = 0.0;
  f[start] = 1e-300;
  for (int k = start; k >= 1; --k) {
    f[k - 1] = f[k + 1] + (2.0 * k / x) * f[k];
    if (f[k - 1] > 1e250) {  // rescale everything computed so far
      for (int j = k - 1; j <= start + 1; ++j) f[j] *= 1e-250;
    }
  }
  double norm = f[0];
  for (int k = 1; k <= start; ++k) norm += 2.0 * f[k];
  std::vector<double> out(static_cast<size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out[k] = f[k] / norm;
  return out;
}

double marcum_q1(double a, double b) {
  if (a < 0.0 || b < 0.0) throw std::domain_error("marcum_q1 requires a, b >= 0");
  if (b == 0.0) return 1.0;
  if (a == 0.0) return std::exp(-b * b / 2.0);

  const double d = a - b;
  // The scaled series below carry the Gaussian prefactor e^{-(a-b)^2/2}; once
  // it underflows, the remaining factor is <= 1, so the value saturates.
  if (d * d / 2.0 > 745.0) return a > b ? 1.0 : 0.0;

  const double x = a * b;
  const int k_hint = static_cast<int>(std::ceil(std::sqrt(90.0 * x))) + 40;
  const std::vector<double> ik = bessel_ik_scaled_array(x, k_hint);
  const double prefactor = std::exp(-d * d / 2.0);

  if (b > a) {
    // Q1 = e^{-(b-a)^2/2} * sum_{k>=0} (a/b)^k e^{-ab} I_k(ab); all terms
    // positive, total <= 1, so no cancellation in either regime.
    const double rho = a / b;
    double rho_k = 1.0, sum = 0.0;
    for (int k = 0; k <= k_hint; ++k) {
      const double term = rho_k * ik[k];
      sum += term;
      if (term < sum * 1e-18 && k > 2) break;
      rho_k *= rho;
    }
    return std::min(prefactor * sum, 1.0);
  }
  // a >= b: sum the complement instead, which is the small quantity here.
  const double rho = b / a;
  double rho_k = rho, sum = 0.0;
  for (int k = 1; k <= k_hint; ++k) {
    const double term = rho_k * ik[k];
    sum += term;
    if (term < sum * 1e-18 && k > 2) break;
    rho_k *= rho;
  }
  return 1.0 - std::min(prefactor * sum, 1.0);
}

}  // namespace leocov
