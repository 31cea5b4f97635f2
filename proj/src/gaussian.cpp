#include "imbacost/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace imbacost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGridPoints = 4096;
constexpr double kGoldenWidth = 1e-8;

double upper_tail(double x, double mu, double sigma) {
  return 0.5 * std::erfc((x - mu) / (sigma * std::numbers::sqrt2));
}

double lower_tail(double x, double mu, double sigma) {
  return 0.5 * std::erfc((mu - x) / (sigma * std::numbers::sqrt2));
}

struct BoundaryRates {
  double e1_over_p1;
  double e2_over_p2;
  ClassRates rates;
};

BoundaryRates boundary_rates(const GaussianScenario& s, double x_b) {
  const double p1 = 1.0 - s.p2;
  const double e1_ratio = upper_tail(x_b, s.mu1, s.sigma1);
  const double cr1_ratio = lower_tail(x_b, s.mu1, s.sigma1);
  const double e2_ratio = lower_tail(x_b, s.mu2, s.sigma2);
  const double cr2_ratio = upper_tail(x_b, s.mu2, s.sigma2);
  return BoundaryRates{e1_ratio, e2_ratio,
                       ClassRates(p1 * cr1_ratio, p1 * e1_ratio,
                                  s.p2 * e2_ratio, s.p2 * cr2_ratio)};
}

// Minimization objective equivalent to optimizing the measure. Total
// accuracy uses its risk form e1 + e2: near the optimum at extreme skew the
// measure is ~1 with curvature ~p2*phi, so its floating-point landscape is
// flat over ~1e-3 wide stretches, while e1 + e2 keeps full resolution.
double objective(MeasureId id, const GaussianScenario& s, double x_b) {
  const BoundaryRates br = boundary_rates(s, x_b);
  try {
    if (id.kind == Measure::TotalAccuracy) {
      return br.rates.e1() + br.rates.e2();
    }
    const MeasureValue m = evaluate(id, br.rates);
    return id.kind == Measure::BalancedError ? m.value : -m.value;
  } catch (const DegenerateMeasure&) {
    return kInf;
  }
}

} // namespace

void GaussianScenario::validate() const {
  if (!(mu1 < mu2)) throw DomainError("scenario requires mu1 < mu2");
  if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) {
    throw DomainError("standard deviations must be positive");
  }
  if (!(p2 > 0.0 && p2 < 1.0)) {
    throw DomainError("p2 must lie strictly between 0 and 1");
  }
}

GaussianScenario GaussianScenario::with_p2(double new_p2) const {
  GaussianScenario out = *this;
  out.p2 = new_p2;
  return out;
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double normal_cdf_complement(double z) {
  return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

ClassRates rates_at(const GaussianScenario& s, double x_b) {
  s.validate();
  return boundary_rates(s, x_b).rates;
}

double bayes_boundary_equal_variance(const GaussianScenario& s) {
  s.validate();
  if (s.sigma1 != s.sigma2) {
    throw UnequalVariance("closed form needs sigma1 == sigma2");
  }
  const double p1 = 1.0 - s.p2;
  return 0.5 * (s.mu1 + s.mu2) +
         s.sigma1 * s.sigma1 * std::log(p1 / s.p2) / (s.mu2 - s.mu1);
}

OptimumSolution optimize_boundary(const GaussianScenario& s, MeasureId id) {
  s.validate();
  const double lo = s.mu1 - 8.0 * s.sigma1;
  const double hi = s.mu2 + 8.0 * s.sigma2;

  // Coarse scan to bracket the global optimum.
  int best = -1;
  double best_value = kInf;
  const double step = (hi - lo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    const double f = objective(id, s, lo + step * i);
    if (f < best_value) {
      best_value = f;
      best = i;
    }
  }
  if (best < 0) {
    throw NonFinite("measure degenerate over the whole search interval");
  }

  // Golden-section refinement inside the bracketing neighbors.
  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, kGridPoints - 1);
  constexpr double invphi = 0.6180339887498949; // (sqrt(5) - 1) / 2
  double c = b - (b - a) * invphi;
  double d = a + (b - a) * invphi;
  double fc = objective(id, s, c);
  double fd = objective(id, s, d);
  while (b - a > kGoldenWidth) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = objective(id, s, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = objective(id, s, d);
    }
  }
  const double x_b = 0.5 * (a + b);

  const BoundaryRates br = boundary_rates(s, x_b);
  const MeasureValue m = evaluate(id, br.rates);
  return OptimumSolution{id, x_b, m.value, br.e1_over_p1, br.e2_over_p2};
}

std::vector<SweepEntry> sweep(const GaussianScenario& base,
                              std::span<const MeasureId> ids,
                              std::span<const double> p2_list) {
  std::vector<SweepEntry> out;
  out.reserve(ids.size() * p2_list.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const MeasureId& id : ids) {
    for (double p2 : p2_list) {
      SweepEntry entry;
      entry.id = id;
      entry.p2 = p2;
      try {
        entry.solution = optimize_boundary(base.with_p2(p2), id);
      } catch (const Error& e) {
        entry.solution = OptimumSolution{id, nan, nan, nan, nan};
        entry.ok = false;
        entry.error = e.what();
      }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

} // namespace imbacost
