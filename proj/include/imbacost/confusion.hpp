#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "imbacost/errors.hpp"

namespace imbacost {

/// Tolerance for checks of the form "these rates must sum to one"; covers
/// double rounding from division by the sample total.
inline constexpr double kRateTolerance = 1e-12;

/// 2x2 outcome table of a binary classifier,
///
///   [ tn  fp ]
///   [ fn  tp ]
///
/// with class 1 = negative and class 2 = positive. Entries are real-valued
/// so that expected confusion matrices of continuous models fit the same
/// type as integer counts.
struct ConfusionMatrix {
  double tn = 0.0;
  double fp = 0.0;
  double fn = 0.0;
  double tp = 0.0;

  double total() const { return tn + fp + fn + tp; }
};

/// Per-class correct-recognition and error rates, i.e. the confusion matrix
/// normalized by the sample total:
///
///   [ cr1  e1 ]
///   [ e2  cr2 ]
///
/// Population rates are p1 = cr1 + e1 and p2 = cr2 + e2. Construction
/// enforces: all entries >= 0, p1 + p2 = 1 (within kRateTolerance) and
/// 0 < p_i < 1 strictly. The strict bounds are errors rather than clamps;
/// every downstream cost function divides by p2 or 1 - p2.
class ClassRates {
public:
  ClassRates(double cr1, double e1, double e2, double cr2);

  double cr1() const { return cr1_; }
  double e1() const { return e1_; }
  double e2() const { return e2_; }
  double cr2() const { return cr2_; }

  double p1() const { return cr1_ + e1_; }
  double p2() const { return cr2_ + e2_; }

  bool operator==(const ClassRates&) const = default;

private:
  double cr1_;
  double e1_;
  double e2_;
  double cr2_;
};

/// Normalizes raw counts to class rates (cr1 = tn/N, e1 = fp/N, e2 = fn/N,
/// cr2 = tp/N). Throws EmptyMatrix when N = 0 and MissingClass when either
/// class has zero population.
ClassRates normalize(const ConfusionMatrix& m);

/// Scales rates back to a confusion matrix with total n > 0. Entries are
/// fractional when n is not a multiple of the rate denominators;
/// normalize(denormalize(r, n)) == r up to kRateTolerance.
ConfusionMatrix denormalize(const ClassRates& r, double n);

/// Class-imbalance (skewness) ratio p1/p2; > 1 when class 2 is the minority.
double skew_ratio(const ClassRates& r);

/// Reads matrices from CSV with the exact header "tn,fp,fn,tp", one matrix
/// per row. Throws ParseError with a line number on malformed input.
std::vector<ConfusionMatrix> load_matrices_csv(std::istream& in);

/// Reads matrices from a JSON array of objects carrying the keys
/// tn, fp, fn, tp. Unknown keys are ignored.
std::vector<ConfusionMatrix> load_matrices_json(std::istream& in);

/// Loads from a file path; format is "csv" or "json".
std::vector<ConfusionMatrix> load_matrices(const std::string& path,
                                           std::string_view format);

} // namespace imbacost
