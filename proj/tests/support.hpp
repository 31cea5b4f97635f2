#pragma once

// Shared test helpers: an independent high-precision normal CDF oracle and
// a deterministic generator of valid rate tuples.

#include <cmath>
#include <numbers>
#include <random>

#include "imbacost/confusion.hpp"

namespace testsupport {

// Maclaurin series for erf(x); alternating terms stay below ~20 for
// |x| <= 2.5, so cancellation costs at most a few 1e-15.
inline double erf_series(double x) {
  const double x2 = x * x;
  double term = x; // x^(2n+1) / n!
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / n;
    const double contribution = term / (2 * n + 1);
    sum += contribution;
    if (std::abs(contribution) < 1e-18 * std::abs(sum)) break;
  }
  return sum * 2.0 / std::sqrt(std::numbers::pi);
}

// Upper-tail probability via the Mills-ratio continued fraction
//   Q(z) = phi(z) / (z + 1/(z + 2/(z + 3/(...)))),
// evaluated with the modified Lentz algorithm. Accurate for z >= ~3.
inline double upper_tail_cf(double z) {
  const double phi =
      std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  const double tiny = 1e-300;
  double f = z;
  double c = z;
  double d = 0.0;
  for (int n = 1; n < 2000; ++n) {
    const double a = n;
    d = z + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = z + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return phi / f;
}

// Standard normal CDF, independent of std::erfc.
inline double oracle_normal_cdf(double z) {
  if (z < -3.5) return upper_tail_cf(-z);
  if (z > 3.5) return 1.0 - upper_tail_cf(z);
  return 0.5 * (1.0 + erf_series(z / std::numbers::sqrt2));
}

// Upper-tail counterpart with full relative accuracy for large z.
inline double oracle_upper_tail(double z) {
  if (z > 3.5) return upper_tail_cf(z);
  if (z < -3.5) return 1.0 - upper_tail_cf(-z);
  return 0.5 * (1.0 - erf_series(z / std::numbers::sqrt2));
}

// Deterministic generator of valid rate tuples.
class RatesGenerator {
public:
  explicit RatesGenerator(unsigned seed = 20240901) : rng_(seed) {}

  // Any valid tuple: log-uniform skew down to p2 = 1e-6 (mirrored so either
  // class can be the minority) and error fractions over the closed unit
  // interval, hitting the exact edges occasionally.
  imbacost::ClassRates next_full() {
    return make(sample_p2(1e-6), sample_fraction(), sample_fraction());
  }

  // Tuples keeping the F1 cost identity away from its p2 = e2 pole: at most
  // 90% of the minority misclassified and p2 >= 1e-3.
  imbacost::ClassRates next_identity() {
    return make(sample_p2(1e-3), sample_fraction(), 0.9 * uniform_(rng_));
  }

private:
  static imbacost::ClassRates make(double p2, double u1, double u2) {
    const double p1 = 1.0 - p2;
    const double e1 = u1 * p1;
    const double e2 = u2 * p2;
    return imbacost::ClassRates(p1 - e1, e1, e2, p2 - e2);
  }

  double sample_p2(double min_p2) {
    const double lo = std::log(min_p2);
    const double hi = std::log(0.5);
    double p = std::exp(lo + (hi - lo) * uniform_(rng_));
    if (coin_(rng_)) p = 1.0 - p;
    return p;
  }

  double sample_fraction() {
    const double u = uniform_(rng_);
    if (u < 0.05) return 0.0;
    if (u > 0.95) return 1.0;
    return (u - 0.05) / 0.9;
  }

  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::bernoulli_distribution coin_{0.5};
};

} // namespace testsupport
