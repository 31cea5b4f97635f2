#pragma once

#include <stdexcept>
#include <string>

namespace imbacost {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Confusion matrix with zero total sample mass.
class EmptyMatrix : public Error {
public:
  using Error::Error;
};

/// One of the two classes has zero population, so the population rates
/// would sit on the closed boundary {0, 1}.
class MissingClass : public Error {
public:
  using Error::Error;
};

/// Rate tuple violating the class-rate constraints (negative entries,
/// populations not summing to one, error mass exceeding its class).
class InvalidRates : public Error {
public:
  using Error::Error;
};

/// A measure whose defining formula has a vanishing denominator at the
/// given rates and no agreed continuation value.
class DegenerateMeasure : public Error {
public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Apparent F-beta costs requested where the minority class is fully
/// misclassified (division by p2 - E2 = 0).
class DegenerateApparentCost : public Error {
public:
  using Error::Error;
};

/// Operation not defined for the requested measure.
class UnsupportedMeasure : public Error {
public:
  using Error::Error;
};

/// Closed-form decision boundary requested for unequal class variances.
class UnequalVariance : public Error {
public:
  using Error::Error;
};

/// Objective had no finite value anywhere on the search interval.
class NonFinite : public Error {
public:
  using Error::Error;
};

/// Malformed input file; the message carries line/record diagnostics.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace imbacost
