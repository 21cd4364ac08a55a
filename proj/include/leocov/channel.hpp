#pragma once

#include "leocov/rng.hpp"
#include "leocov/types.hpp"

// Fading link model: received SNR over distance, and the squared-Rician
// (noncentral chi-squared, 2 degrees of freedom, noncentrality 2K) channel
// gain. Gains are deliberately unnormalized: mean 2K + 2, matching the CDF
// F(g) = 1 - Q1(sqrt(2K), sqrt(g)).

namespace leocov {

// p_s * G * r^{-alpha} / sigma^2 while the satellite is within r_max;
// exactly 0 beyond it. Distances are in meters.
double snr(const LinkBudget& lb, double gain, double distance_m, double r_max_m);

// P(G <= g) = 1 - Q1(sqrt(2K), sqrt(g)).
double gain_cdf(const LinkBudget& lb, double g);

// dP/dg = (1/2) e^{-(g + 2K)/2} I0(sqrt(2 K g)), evaluated in scaled form so
// large K cannot overflow.
double gain_pdf(const LinkBudget& lb, double g);

// Smallest g with gain_cdf(g) >= p, by bisection; p in [0, 1).
double gain_quantile(const LinkBudget& lb, double p);

// One draw of (Z1 + sqrt(2K))^2 + Z2^2 from the stream.
double sample_gain(const LinkBudget& lb, Rng& rng);

}  // namespace leocov
