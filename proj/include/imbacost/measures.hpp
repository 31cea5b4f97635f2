#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "imbacost/confusion.hpp"

namespace imbacost {

/// The twelve binary-classification performance measures, plus the
/// parametric F-beta family. The first twelve are listed in the canonical
/// reporting order used throughout the library.
enum class Measure {
  TotalAccuracy,    // A_T = cr1 + cr2
  ArithmeticPR,     // (P + R) / 2
  GeometricPR,      // sqrt(P * R)
  QuadraticPR,      // sqrt((P^2 + R^2) / 2)
  F1,               // harmonic mean of precision and recall
  BalancedAccuracy, // (A1 + A2) / 2, single-point AUC
  GeometricAcc,     // sqrt(A1 * A2)
  QuadraticAcc,     // sqrt((A1^2 + A2^2) / 2)
  HarmonicAcc,      // 2 A1 A2 / (A1 + A2)
  BalancedError,    // (E1/p1 + E2/p2) / 2
  Mcc,              // Matthews correlation coefficient
  Kappa,            // Cohen's kappa
  FBeta,            // (1 + b^2) P R / (b^2 P + R), parametric in b
};

/// The twelve parameter-free measures in reporting order.
inline constexpr std::array<Measure, 12> kMeasureOrder = {
    Measure::TotalAccuracy, Measure::ArithmeticPR,     Measure::GeometricPR,
    Measure::QuadraticPR,   Measure::F1,               Measure::BalancedAccuracy,
    Measure::GeometricAcc,  Measure::QuadraticAcc,     Measure::HarmonicAcc,
    Measure::BalancedError, Measure::Mcc,              Measure::Kappa,
};

/// A measure identifier; carries the beta parameter when kind == FBeta.
struct MeasureId {
  Measure kind;
  double beta;

  constexpr MeasureId(Measure k) : kind(k), beta(1.0) {} // NOLINT(google-explicit-constructor)

  /// F-beta with the given beta > 0; fbeta(1) evaluates identically to F1.
  static MeasureId fbeta(double beta);

  bool parametric() const { return kind == Measure::FBeta; }

  bool operator==(const MeasureId&) const = default;
};

enum class Orientation { Maximize, Minimize };

/// A measure evaluated at a rate tuple. `degenerate` is set by batch
/// evaluation for entries whose defining formula broke down; the value is
/// NaN in that case.
struct MeasureValue {
  MeasureId id;
  double value = 0.0;
  Orientation orientation = Orientation::Maximize;
  bool degenerate = false;
};

/// Short lowercase label ("ber", "f1", "auc_b", ...).
std::string_view measure_name(MeasureId id);

/// Inverse of measure_name; accepts the aliases "h_pr" (= f1) and
/// "a_ai" (= auc_b). Case-insensitive. Empty optional on unknown names.
std::optional<Measure> measure_from_name(std::string_view name);

/// Minimize for the balanced error rate, maximize for everything else.
Orientation orientation_of(MeasureId id);

/// Smallest attainable value: 0 for the [0,1]-ranged measures, -1 for MCC
/// and kappa.
double minimum_value(MeasureId id);

/// Precision P = cr2/(cr2 + e1) and recall R = cr2/p2. When nothing is
/// predicted positive (cr2 + e1 = 0), P = 0 by convention.
std::pair<double, double> precision_recall(const ClassRates& r);

/// Per-class accuracy rates A1 = cr1/p1 (specificity) and A2 = cr2/p2
/// (sensitivity, = recall).
std::pair<double, double> accuracy_rates(const ClassRates& r);

/// Evaluates one measure. Throws DegenerateMeasure when the formula's
/// denominator vanishes with a non-zero numerator (possible for MCC and
/// kappa on boundary rate tuples); the uninformative 0/0 limit returns 0.
MeasureValue evaluate(MeasureId id, const ClassRates& r);

/// Evaluates the twelve measures in kMeasureOrder, then one F-beta entry
/// per requested beta. Degenerate entries are flagged instead of aborting
/// the batch.
std::vector<MeasureValue> evaluate_all(const ClassRates& r,
                                       std::span<const double> betas = {});

} // namespace imbacost
