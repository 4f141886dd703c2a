#pragma once

// Normal CDF by composite Simpson quadrature of the density, no erf.

#include <cmath>

namespace oracle::gaussian {

inline double density(double x, double sigma) {
  const double pi = 3.14159265358979323846;
  return std::exp(-0.5 * (x / sigma) * (x / sigma)) / (sigma * std::sqrt(2.0 * pi));
}

// 1/2 + integral of N(0, sigma^2) from 0 to d.
inline double expected_score(double d, double sigma, int panels = 2000) {
  if (d == 0) return 0.5;
  const double h = d / panels;
  double s = density(0, sigma) + density(d, sigma);
  for (int i = 1; i < panels; ++i) s += density(i * h, sigma) * (i % 2 ? 4 : 2);
  return 0.5 + s * h / 3.0;
}

inline double logistic(double d) { return 1.0 / (1.0 + std::pow(10.0, -d / 400.0)); }

struct Fit {
  int delta = 0;
  double residual = 0;
};

// Grid search over delta (sigma = sqrt(2) * delta) for the smallest worst-case
// gap to the logistic curve on integer d in [-1000, 1000].
template <class Cdf>
Fit best_fit(Cdf cdf, int lo = 100, int hi = 400) {
  Fit best{0, 1e9};
  for (int delta = lo; delta <= hi; ++delta) {
    const double sigma = std::sqrt(2.0) * delta;
    double worst = 0;
    for (int d = -1000; d <= 1000; ++d) worst = std::fmax(worst, std::fabs(logistic(d) - cdf(d, sigma)));
    if (worst < best.residual) best = {delta, worst};
  }
  return best;
}

}  // namespace oracle::gaussian
