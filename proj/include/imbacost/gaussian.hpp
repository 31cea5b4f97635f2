#pragma once

#include <span>
#include <string>
#include <vector>

#include "imbacost/measures.hpp"

namespace imbacost {

/// Two univariate Gaussian class-conditional densities with a shared
/// single-threshold decision rule: predict class 2 iff x > x_b. Class 2 is
/// the right class (mu1 < mu2) and carries population rate p2.
struct GaussianScenario {
  double mu1 = -1.0;
  double mu2 = 1.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double p2 = 0.5;

  /// Throws DomainError unless mu1 < mu2, both sigmas are positive and
  /// 0 < p2 < 1.
  void validate() const;

  GaussianScenario with_p2(double new_p2) const;
};

/// Standard normal CDF, evaluated through the complementary error function
/// so both tails keep full relative accuracy.
double normal_cdf(double z);

/// Upper-tail probability 1 - Phi(z), without cancellation for large z.
double normal_cdf_complement(double z);

/// Class rates induced by the threshold x_b:
///   E1/p1 = P(X1 > x_b),  E2/p2 = P(X2 <= x_b).
ClassRates rates_at(const GaussianScenario& s, double x_b);

/// Closed-form maximizer of the total accuracy rate for equal variances:
///   x_b = (mu1 + mu2)/2 + sigma^2 ln(p1/p2) / (mu2 - mu1).
/// Throws UnequalVariance when sigma1 != sigma2.
double bayes_boundary_equal_variance(const GaussianScenario& s);

/// A measure-optimal decision boundary with the rates it induces.
struct OptimumSolution {
  MeasureId id = Measure::TotalAccuracy;
  double x_b = 0.0;
  double value = 0.0;
  double e1_over_p1 = 0.0;
  double e2_over_p2 = 0.0;
};

/// Finds the boundary optimizing the measure (minimizing for the balanced
/// error rate, maximizing otherwise) over [mu1 - 8 sigma1, mu2 + 8 sigma2]:
/// a 4096-point grid brackets the global optimum, then golden-section
/// refinement shrinks the bracket to 1e-8. Total accuracy is optimized
/// through its equivalent risk e1 + e2, which stays well conditioned at
/// extreme skew where the measure itself is flat to machine precision.
/// Throws NonFinite when the measure degenerates on the whole interval.
OptimumSolution optimize_boundary(const GaussianScenario& s, MeasureId id);

/// One sweep cell; `ok` is false when the cell's optimization failed, in
/// which case `error` holds the reason and the solution fields are NaN.
struct SweepEntry {
  MeasureId id = Measure::TotalAccuracy;
  double p2 = 0.0;
  OptimumSolution solution;
  bool ok = true;
  std::string error;
};

/// Optimal solutions for every (measure, p2) pair, ordered measure-major in
/// the order given. Cells are independent; failures are recorded per cell
/// and do not abort the sweep.
std::vector<SweepEntry> sweep(const GaussianScenario& base,
                              std::span<const MeasureId> ids,
                              std::span<const double> p2_list);

} // namespace imbacost
