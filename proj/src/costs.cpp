#include "imbacost/costs.hpp"

#include <cmath>
#include <limits>

namespace imbacost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_inverse(double x) { return x > 0.0 ? 1.0 / x : kInf; }

} // namespace

double cost_lambda12(CostType t, double p2) {
  switch (t) {
    case CostType::I: return 1.0;
    case CostType::II: return safe_inverse(p2);
    case CostType::III: return safe_inverse(1.0 - p2);
    case CostType::IV: return safe_inverse(p2 * (1.0 - p2));
  }
  return kInf;
}

double cost_lambda21(CostType t, double p2) {
  switch (t) {
    case CostType::I: return 1.0;
    case CostType::II: return safe_inverse(p2);
    case CostType::III: return safe_inverse(p2);
    case CostType::IV: return safe_inverse(p2 * (1.0 - p2));
  }
  return kInf;
}

double CostProfile::lambda12(double p2) const {
  return cost_lambda12(cost_type, p2);
}

double CostProfile::lambda21(double p2) const {
  return cost_lambda21(cost_type, p2);
}

bool CostProfile::bound_condition(double e1, double e2) const {
  switch (bound_remark) {
    case BoundRemark::HoldsForAnyError: return true;
    case BoundRemark::HoldsAboveThreshold: return e1 > bound_coeff * e2;
    case BoundRemark::Unknown: return false;
  }
  return false;
}

CostProfile cost_profile(MeasureId id) {
  auto make = [&](CostType t, Exactness e, BoundRemark b, double coeff = 0.0) {
    const Verdict v = t == CostType::III ? Verdict::Proper : Verdict::Improper;
    return CostProfile{id, t, e, v, b, coeff};
  };
  switch (id.kind) {
    case Measure::TotalAccuracy:
      return make(CostType::I, Exactness::Exact, BoundRemark::HoldsForAnyError);
    case Measure::ArithmeticPR:
      return make(CostType::II, Exactness::ApproximateLowerBound,
                  BoundRemark::HoldsAboveThreshold, 2.0 + std::sqrt(5.0));
    case Measure::GeometricPR:
      return make(CostType::II, Exactness::ApproximateLowerBound,
                  BoundRemark::HoldsAboveThreshold, 3.0 + 2.0 * std::sqrt(3.0));
    case Measure::QuadraticPR:
      return make(CostType::II, Exactness::ApproximateLowerBound,
                  BoundRemark::HoldsAboveThreshold,
                  5.0 / 3.0 + 2.0 / 3.0 * std::sqrt(7.0));
    case Measure::F1:
      return make(CostType::II, Exactness::ApproximateLowerBound,
                  BoundRemark::HoldsForAnyError);
    case Measure::BalancedAccuracy:
      return make(CostType::III, Exactness::Exact,
                  BoundRemark::HoldsForAnyError);
    case Measure::GeometricAcc:
    case Measure::QuadraticAcc:
    case Measure::HarmonicAcc:
      return make(CostType::III, Exactness::ApproximateLowerBound,
                  BoundRemark::HoldsForAnyError);
    case Measure::BalancedError:
      return make(CostType::III, Exactness::Exact,
                  BoundRemark::HoldsForAnyError);
    case Measure::Mcc:
    case Measure::Kappa:
      return make(CostType::IV, Exactness::ApproximateUnknownBound,
                  BoundRemark::Unknown);
    case Measure::FBeta:
      throw UnsupportedMeasure(
          "F-beta has no fixed cost profile; use apparent_costs_fbeta");
  }
  throw UnsupportedMeasure("unknown measure");
}

std::pair<double, double> eval_costs(const CostProfile& profile, double p2) {
  if (!(p2 > 0.0 && p2 < 1.0)) {
    throw DomainError("p2 must lie strictly between 0 and 1");
  }
  return {profile.lambda12(p2), profile.lambda21(p2)};
}

ApparentCosts apparent_costs_fbeta(const ClassRates& r, double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  const double margin = r.p2() - r.e2(); // = cr2
  if (margin <= 0.0) {
    throw DegenerateApparentCost(
        "minority class fully misclassified: p2 - e2 = 0");
  }
  return ApparentCosts{1.0 / margin, beta * beta / margin, beta};
}

double risk_transform(MeasureId id, const ClassRates& r) {
  if (id.kind == Measure::TotalAccuracy) return r.e1() + r.e2();
  const MeasureValue m = evaluate(id, r);
  if (id.kind == Measure::BalancedError) return m.value;
  const double margin = m.value - minimum_value(id);
  if (margin <= 0.0) return kInf;
  return 1.0 / margin;
}

double verify_cost_identity(MeasureId id, const ClassRates& r) {
  if (id.kind == Measure::BalancedError) {
    const double lhs = evaluate(id, r).value;
    const double l12 = cost_lambda12(CostType::III, r.p2());
    const double l21 = cost_lambda21(CostType::III, r.p2());
    return std::abs(lhs - 0.5 * (l12 * r.e1() + l21 * r.e2()));
  }
  if (id.kind == Measure::F1) {
    const ApparentCosts costs = apparent_costs_fbeta(r, 1.0);
    const double f1 = evaluate(id, r).value;
    const double rhs =
        1.0 + 0.5 * (costs.lambda12 * r.e1() + costs.lambda21 * r.e2());
    return std::abs(1.0 / f1 - rhs);
  }
  throw UnsupportedMeasure("cost identity is defined for ber and f1 only");
}

bool bound_condition_holds(MeasureId id, const ClassRates& r) {
  return cost_profile(id).bound_condition(r.e1(), r.e2());
}

std::string_view to_string(CostType t) {
  switch (t) {
    case CostType::I: return "I";
    case CostType::II: return "II";
    case CostType::III: return "III";
    case CostType::IV: return "IV";
  }
  return "?";
}

std::string_view to_string(Exactness e) {
  switch (e) {
    case Exactness::Exact: return "exact";
    case Exactness::ApproximateLowerBound: return "approximate_lower_bound";
    case Exactness::ApproximateUnknownBound: return "approximate_unknown_bound";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::Proper ? "proper" : "improper";
}

} // namespace imbacost
