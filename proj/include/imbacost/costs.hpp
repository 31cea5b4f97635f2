#pragma once

#include <string_view>
#include <utility>

#include "imbacost/measures.hpp"

namespace imbacost {

/// The four families of equivalent misclassification-cost functions of the
/// minority population rate p2. lambda12 prices a class-1 error (majority
/// sample misclassified), lambda21 a class-2 error (minority sample
/// misclassified):
///
///   I   : lambda12 = lambda21 = 1
///   II  : lambda12 = lambda21 = 1/p2
///   III : lambda12 = 1/(1-p2), lambda21 = 1/p2
///   IV  : lambda12 = lambda21 = 1/(p2 (1-p2))
enum class CostType { I, II, III, IV };

/// Whether the cost functions are the measure's exact equivalent costs, a
/// first-order approximation known to lower-bound the exact behavior, or an
/// approximation whose bound feature is unknown (MCC, kappa).
enum class Exactness { Exact, ApproximateLowerBound, ApproximateUnknownBound };

/// Proper: a minority-class error costs more than a majority-class error
/// whenever the classes are imbalanced. Holds exactly for Type III.
enum class Verdict { Proper, Improper };

/// Validity domain of the lower-bound feature.
enum class BoundRemark {
  HoldsForAnyError,    // bound (or exactness) holds for all error rates
  HoldsAboveThreshold, // bound holds when e1 > coeff * e2
  Unknown,             // bound feature not established
};

/// Cost-function row for one of the twelve measures: the lambda pair as
/// functions of p2 plus the qualitative classification.
struct CostProfile {
  MeasureId id;
  CostType cost_type;
  Exactness exactness;
  Verdict verdict;
  BoundRemark bound_remark;
  double bound_coeff = 0.0; // threshold c in "e1 > c * e2"

  double lambda12(double p2) const;
  double lambda21(double p2) const;

  /// True when the lower-bound feature applies at the given error rates;
  /// false when it is unknown.
  bool bound_condition(double e1, double e2) const;
};

/// Apparent costs of F-beta: still coupled with the error rates, hence a
/// function of the whole rate tuple rather than of p2 alone.
struct ApparentCosts {
  double lambda12;
  double lambda21;
  double beta;
};

/// Raw cost functions per family; return +infinity on the open-interval
/// boundaries p2 in {0, 1} so diverging branches can be plotted.
double cost_lambda12(CostType t, double p2);
double cost_lambda21(CostType t, double p2);

/// The cost-function row for a parameter-free measure. Throws
/// UnsupportedMeasure for FBeta (use apparent_costs_fbeta).
CostProfile cost_profile(MeasureId id);

/// Lambda pair at a specific minority rate; DomainError unless 0 < p2 < 1.
std::pair<double, double> eval_costs(const CostProfile& profile, double p2);

/// Apparent F-beta costs lambda12 = 1/(p2 - e2), lambda21 = beta^2/(p2 - e2).
/// Throws DegenerateApparentCost when the minority class is fully
/// misclassified (p2 = e2).
ApparentCosts apparent_costs_fbeta(const ClassRates& r, double beta);

/// Equivalent minimization objective of a measure at the given rates:
/// e1 + e2 for total accuracy, the measure itself for the balanced error
/// rate, and 1/(M - M_min) for every maximize-measure. Returns +infinity
/// when M = M_min.
double risk_transform(MeasureId id, const ClassRates& r);

/// Residual |lhs - rhs| of the defining cost identity, for BER
/// (ber = (lambda12 e1 + lambda21 e2)/2 with Type III costs) or F1
/// (1/f1 = 1 + (lambda12 e1 + lambda21 e2)/2 with apparent costs at
/// beta = 1). Expected < 1e-10 for all valid inputs.
double verify_cost_identity(MeasureId id, const ClassRates& r);

/// Evaluates the lower-bound predicate for the measure at the given rates.
bool bound_condition_holds(MeasureId id, const ClassRates& r);

std::string_view to_string(CostType t);
std::string_view to_string(Exactness e);
std::string_view to_string(Verdict v);

} // namespace imbacost
