#pragma once

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "imbacost/costs.hpp"
#include "imbacost/gaussian.hpp"

namespace imbacost {

/// One plot-ready data series.
struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string x_name;
  std::string y_name;
};

/// A table cell: numeric, or a text label.
using Cell = std::variant<std::string, double>;

/// Machine-readable table with a schema name, a header row and data rows.
struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Built-in fixed-population scenario: e1 = 0.1, e2 = p2/2 for each
/// p2 in {0.5, 0.1, 0.05, 0.01, 0.005, 0.001}.
inline constexpr std::array<double, 6> kScenario1P2 = {0.5,  0.1,   0.05,
                                                       0.01, 0.005, 0.001};
inline constexpr double kScenario1E1 = 0.1;

/// Built-in Gaussian scenario defaults: mu = (-1, 1), sigma = (1, 1),
/// swept over p2 in {0.5, 0.1, 0.01, 1e-3, 1e-4, 1e-5} with the five
/// comparison measures at, ber, f1, g_ai, g_pr.
inline constexpr std::array<double, 6> kScenario2P2 = {0.5,  0.1,  0.01,
                                                       1e-3, 1e-4, 1e-5};
inline constexpr std::array<Measure, 5> kScenario2Measures = {
    Measure::TotalAccuracy, Measure::BalancedError, Measure::F1,
    Measure::GeometricAcc, Measure::GeometricPR};

/// Balanced error rate and F1 with their exact cost values on the
/// fixed-population scenario. Columns are the p2 values; rows are
/// {ber, ber_lambda12, ber_lambda21, f1, f1_lambda12, f1_lambda21}. The
/// sample total n only scales the underlying matrices, not the rates.
Table table2(double n = 10000.0);

/// Measure-optimal boundaries on a Gaussian scenario: one row per
/// (measure, p2) cell with value, x_b, e1/p1 and e2/p2.
Table table3(const GaussianScenario& base, std::span<const MeasureId> ids,
             std::span<const double> p2_list);

/// table3 on the built-in Gaussian scenario defaults.
Table table3();

/// The four cost-function families evaluated on the grid: 1/p2, 1/(1-p2),
/// 1/(p2(1-p2)) and the constant 1. Grid points must lie in (0,1).
std::vector<Series> fig3_series(std::span<const double> p2_grid);

/// Cost values underlying table2 as series over p2: the shared F1 lambda
/// and the two balanced-error lambdas.
std::vector<Series> fig4_series();

/// Optimal minority error fraction e2/p2 versus skew ratio p1/p2, one
/// series per measure, from the Gaussian sweep.
std::vector<Series> fig5_series(const GaussianScenario& base,
                                std::span<const MeasureId> ids,
                                std::span<const double> p2_list);
std::vector<Series> fig5_series();

/// Shortest round-trip decimal form; infinities serialize as "inf"/"-inf".
std::string format_value(double v);

/// CSV with a header row, LF line endings and '.' decimal separator.
std::string to_csv(const Table& table);
std::string to_csv(std::span<const Series> series);

/// JSON object {"schema": ..., "rows": [...]} with keys in column order;
/// non-finite values appear as string tokens.
std::string to_json(const Table& table);
std::string to_json(std::string_view schema, std::span<const Series> series);

} // namespace imbacost
