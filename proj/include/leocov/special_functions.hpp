#pragma once

#include <vector>

// Modified Bessel I0 and the first-order Marcum Q function, accurate enough
// for the link-model tails: marcum_q1 absolute error <= 1e-10 for a,b <= 40,
// bessel_i0 relative error <= 1e-12.

namespace leocov {

// I0(x) for x >= 0. Throws std::overflow_error once e^x I0(x) exceeds the
// double range (x > ~713); use the scaled variant beyond that.
double bessel_i0(double x);

// e^{-x} I0(x), stable for every nonnegative x.
double bessel_i0_scaled(double x);

// e^{-x} I_k(x) for k = 0..k_max, by backward recurrence normalized with
// I0 + 2*sum I_k = e^x. Requires x > 0.
std::vector<double> bessel_ik_scaled_array(double x, int k_max);

// Q1(a, b) = P((Z1+a)^2 + Z2^2 > b^2) for independent standard normals.
// Monotone in both arguments, saturates cleanly to 0/1 in the far tails.
double marcum_q1(double a, double b);

}  // namespace leocov
