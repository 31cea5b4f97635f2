#include "imbacost/measures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace imbacost {

namespace {

double quadratic_mean(double a, double b) {
  return std::sqrt((a * a + b * b) / 2.0);
}

double harmonic_mean(double a, double b) {
  if (a + b <= 0.0) return 0.0; // both zero: uninformative limit
  return 2.0 * a * b / (a + b);
}

double fbeta_value(double p, double r, double beta) {
  const double b2 = beta * beta;
  const double den = b2 * p + r;
  if (den <= 0.0) return 0.0;
  return (1.0 + b2) * p * r / den;
}

double mcc_value(const ClassRates& r) {
  // Normalized form of the count formula: divide numerator and the
  // radicand by N^2. Avoids overflow on large counts.
  const double num = r.cr1() * r.cr2() - r.e1() * r.e2();
  const double radicand =
      r.p1() * r.p2() * (r.cr1() + r.e2()) * (r.cr2() + r.e1());
  if (radicand <= 0.0) {
    if (num == 0.0) return 0.0;
    throw DegenerateMeasure("MCC undefined: a predicted class is empty");
  }
  return std::clamp(num / std::sqrt(radicand), -1.0, 1.0);
}

double kappa_value(const ClassRates& r) {
  const double pr_a = r.cr1() + r.cr2();
  // Chance agreement from population-rate-weighted predicted-class rates.
  const double pr_e =
      r.p1() * (r.cr1() + r.e2()) + r.p2() * (r.cr2() + r.e1());
  if (pr_e >= 1.0) {
    throw DegenerateMeasure("kappa undefined: chance agreement is 1");
  }
  return std::clamp((pr_a - pr_e) / (1.0 - pr_e), -1.0, 1.0);
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

} // namespace

MeasureId MeasureId::fbeta(double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  MeasureId id(Measure::FBeta);
  id.beta = beta;
  return id;
}

std::string_view measure_name(MeasureId id) {
  switch (id.kind) {
    case Measure::TotalAccuracy: return "at";
    case Measure::ArithmeticPR: return "a_pr";
    case Measure::GeometricPR: return "g_pr";
    case Measure::QuadraticPR: return "q_pr";
    case Measure::F1: return "f1";
    case Measure::BalancedAccuracy: return "auc_b";
    case Measure::GeometricAcc: return "g_ai";
    case Measure::QuadraticAcc: return "q_ai";
    case Measure::HarmonicAcc: return "h_ai";
    case Measure::BalancedError: return "ber";
    case Measure::Mcc: return "mcc";
    case Measure::Kappa: return "kappa";
    case Measure::FBeta: return "fbeta";
  }
  return "?";
}

std::optional<Measure> measure_from_name(std::string_view name) {
  const std::string n = lowercase(name);
  if (n == "at") return Measure::TotalAccuracy;
  if (n == "a_pr") return Measure::ArithmeticPR;
  if (n == "g_pr") return Measure::GeometricPR;
  if (n == "q_pr") return Measure::QuadraticPR;
  if (n == "f1" || n == "h_pr") return Measure::F1;
  if (n == "auc_b" || n == "a_ai") return Measure::BalancedAccuracy;
  if (n == "g_ai") return Measure::GeometricAcc;
  if (n == "q_ai") return Measure::QuadraticAcc;
  if (n == "h_ai") return Measure::HarmonicAcc;
  if (n == "ber") return Measure::BalancedError;
  if (n == "mcc") return Measure::Mcc;
  if (n == "kappa") return Measure::Kappa;
  return std::nullopt;
}

Orientation orientation_of(MeasureId id) {
  return id.kind == Measure::BalancedError ? Orientation::Minimize
                                           : Orientation::Maximize;
}

double minimum_value(MeasureId id) {
  return (id.kind == Measure::Mcc || id.kind == Measure::Kappa) ? -1.0 : 0.0;
}

std::pair<double, double> precision_recall(const ClassRates& r) {
  const double predicted_positive = r.cr2() + r.e1();
  const double p =
      predicted_positive > 0.0 ? r.cr2() / predicted_positive : 0.0;
  return {p, r.cr2() / r.p2()};
}

std::pair<double, double> accuracy_rates(const ClassRates& r) {
  return {r.cr1() / r.p1(), r.cr2() / r.p2()};
}

MeasureValue evaluate(MeasureId id, const ClassRates& r) {
  double value = 0.0;
  switch (id.kind) {
    case Measure::TotalAccuracy:
      value = r.cr1() + r.cr2();
      break;
    case Measure::ArithmeticPR: {
      auto [p, rec] = precision_recall(r);
      value = (p + rec) / 2.0;
      break;
    }
    case Measure::GeometricPR: {
      auto [p, rec] = precision_recall(r);
      value = std::sqrt(p * rec);
      break;
    }
    case Measure::QuadraticPR: {
      auto [p, rec] = precision_recall(r);
      value = quadratic_mean(p, rec);
      break;
    }
    case Measure::F1: {
      auto [p, rec] = precision_recall(r);
      value = harmonic_mean(p, rec);
      break;
    }
    case Measure::BalancedAccuracy: {
      auto [a1, a2] = accuracy_rates(r);
      value = (a1 + a2) / 2.0;
      break;
    }
    case Measure::GeometricAcc: {
      auto [a1, a2] = accuracy_rates(r);
      value = std::sqrt(a1 * a2);
      break;
    }
    case Measure::QuadraticAcc: {
      auto [a1, a2] = accuracy_rates(r);
      value = quadratic_mean(a1, a2);
      break;
    }
    case Measure::HarmonicAcc: {
      auto [a1, a2] = accuracy_rates(r);
      value = harmonic_mean(a1, a2);
      break;
    }
    case Measure::BalancedError:
      value = (r.e1() / r.p1() + r.e2() / r.p2()) / 2.0;
      break;
    case Measure::Mcc:
      value = mcc_value(r);
      break;
    case Measure::Kappa:
      value = kappa_value(r);
      break;
    case Measure::FBeta: {
      auto [p, rec] = precision_recall(r);
      value = fbeta_value(p, rec, id.beta);
      break;
    }
  }
  return MeasureValue{id, value, orientation_of(id), false};
}

std::vector<MeasureValue> evaluate_all(const ClassRates& r,
                                       std::span<const double> betas) {
  std::vector<MeasureValue> out;
  out.reserve(kMeasureOrder.size() + betas.size());
  for (Measure m : kMeasureOrder) {
    try {
      out.push_back(evaluate(m, r));
    } catch (const DegenerateMeasure&) {
      out.push_back(MeasureValue{m, std::numeric_limits<double>::quiet_NaN(),
                                 orientation_of(m), true});
    }
  }
  for (double beta : betas) {
    out.push_back(evaluate(MeasureId::fbeta(beta), r));
  }
  return out;
}

} // namespace imbacost
