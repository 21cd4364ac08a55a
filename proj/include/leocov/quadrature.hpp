#pragma once

#include <cmath>
#include <queue>
#include <utility>
#include <vector>

// Globally adaptive Gauss-Kronrod (7, 15) quadrature on a finite interval.
// The per-interval error estimate is the raw |K15 - G7| difference, which is
// conservative for the smooth integrands this library produces; the reported
// error is the sum over the final partition.

namespace leocov {

struct QuadResult {
  double value = 0.0;
  double error_est = 0.0;
  int subdivisions = 0;
  bool converged = true;
};

namespace quad_detail {

// 15-point Kronrod abscissae on [0, 1] (symmetric about 0) and weights, with
// the embedded 7-point Gauss weights on the odd-indexed nodes.
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

template <class F>
Interval evaluate(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = wgk[7] * fc;
  double gauss = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const double lo = f(center - dx);
    const double hi = f(center + dx);
    kronrod += wgk[j] * (lo + hi);
    if (j % 2 == 1) gauss += wg[j / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace quad_detail

template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                     int max_subdivisions) {
  if (a == b) return {0.0, 0.0, 0, true};
  std::priority_queue<quad_detail::Interval> heap;
  auto first = quad_detail::evaluate(f, a, b);
  double total_value = first.value;
  double total_error = first.error;
  heap.push(first);

  QuadResult out;
  out.subdivisions = 0;
  while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value)) &&
         out.subdivisions < max_subdivisions) {
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at rounding resolution
      heap.push({worst.a, worst.b, worst.value, 0.0});
      total_error -= worst.error;
      continue;
    }
    const auto left = quad_detail::evaluate(f, worst.a, mid);
    const auto right = quad_detail::evaluate(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++out.subdivisions;
  }
  out.value = total_value;
  out.error_est = total_error;
  out.converged = total_error <= std::max(abs_tol, rel_tol * std::abs(total_value));
  return out;
}

}  // namespace leocov
