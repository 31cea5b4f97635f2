// Command-line front end: measure evaluation over confusion-matrix files,
// cost-function queries, the two built-in numerical scenarios and the
// plot-data exports.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "imbacost/confusion.hpp"
#include "imbacost/costs.hpp"
#include "imbacost/gaussian.hpp"
#include "imbacost/measures.hpp"
#include "imbacost/report.hpp"

namespace {

using namespace imbacost;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << text;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &consumed);
    } catch (const std::exception&) {
      throw ParseError("not a number in list: '" + item + "'");
    }
    if (consumed != item.size()) {
      throw ParseError("not a number in list: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<MeasureId> parse_measure_list(const std::string& csv) {
  std::vector<MeasureId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = measure_from_name(item);
    if (!m) throw ParseError("unknown measure '" + item + "'");
    out.emplace_back(*m);
  }
  if (out.empty()) throw ParseError("empty measure list");
  return out;
}

std::string csv_flag(bool b) { return b ? "true" : "false"; }

int run_metrics(const std::string& input, const std::string& format,
                const std::vector<double>& betas, const std::string& out) {
  const auto matrices = load_matrices(input, format);
  if (matrices.empty()) throw ParseError("no records in '" + input + "'");

  std::string text =
      "index,measure,beta,value,orientation,degenerate,cost_type,exactness,"
      "verdict\n";
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    ClassRates rates = [&] {
      try {
        return normalize(matrices[i]);
      } catch (const Error& e) {
        throw ParseError("record " + std::to_string(i) + ": " + e.what());
      }
    }();
    for (const MeasureValue& mv : evaluate_all(rates, betas)) {
      text += std::to_string(i);
      text += ',';
      text += measure_name(mv.id);
      text += ',';
      if (mv.id.parametric()) text += format_value(mv.id.beta);
      text += ',';
      text += format_value(mv.value);
      text += ',';
      text += mv.orientation == Orientation::Minimize ? "minimize" : "maximize";
      text += ',';
      text += csv_flag(mv.degenerate);
      if (mv.id.parametric()) {
        text += ",,,"; // no fixed cost profile for F-beta
      } else {
        const CostProfile profile = cost_profile(mv.id);
        text += ',';
        text += to_string(profile.cost_type);
        text += ',';
        text += to_string(profile.exactness);
        text += ',';
        text += to_string(profile.verdict);
      }
      text += '\n';
    }
  }
  write_output(text, out);
  return 0;
}

int run_costs(const std::string& measure, std::optional<double> p2,
              std::optional<int> grid_points) {
  const auto m = measure_from_name(measure);
  if (!m) throw ParseError("unknown measure '" + measure + "'");
  const CostProfile profile = cost_profile(*m);

  std::vector<double> grid;
  if (p2) {
    grid.push_back(*p2);
  } else {
    // Log-spaced sweep from rare to balanced, endpoints exact.
    const int n = grid_points.value_or(25);
    if (n < 2) throw ParseError("--p2-grid needs at least 2 points");
    const double lo = std::log(1e-3);
    const double hi = std::log(0.5);
    grid.push_back(1e-3);
    for (int i = 1; i < n - 1; ++i) {
      grid.push_back(std::exp(lo + (hi - lo) * i / (n - 1)));
    }
    grid.push_back(0.5);
  }

  std::string text = "measure,p2,lambda12,lambda21\n";
  for (double v : grid) {
    const auto [l12, l21] = eval_costs(profile, v);
    text += std::string(measure_name(*m)) + ',' + format_value(v) + ',' +
            format_value(l12) + ',' + format_value(l21) + '\n';
  }
  write_output(text, "");
  return 0;
}

int run_scenario1(double n, const std::string& format,
                  const std::string& out) {
  const Table t = table2(n);
  write_output(format == "json" ? to_json(t) : to_csv(t), out);
  return 0;
}

int run_scenario2(const GaussianScenario& base,
                  const std::vector<MeasureId>& ids,
                  const std::vector<double>& p2_list,
                  const std::string& format, const std::string& out) {
  const Table t = table3(base, ids, p2_list);
  const auto fig5 = fig5_series(base, ids, p2_list);
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = "scenario2";
    doc["table3"] = nlohmann::ordered_json::parse(to_json(t));
    doc["fig5"] = nlohmann::ordered_json::parse(to_json("fig5", fig5));
    write_output(doc.dump(2) + "\n", out);
  } else {
    write_output(to_csv(t) + "\n" + to_csv(fig5), out);
  }
  return 0;
}

int run_figures(int which, const std::string& format, const std::string& out) {
  std::vector<Series> series;
  std::string schema = "fig" + std::to_string(which);
  if (which == 3) {
    std::vector<double> grid;
    for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
    series = fig3_series(grid);
  } else if (which == 4) {
    series = fig4_series();
  } else {
    series = fig5_series();
  }
  write_output(format == "json" ? to_json(schema, series) : to_csv(series),
               out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Binary-classification performance measures and their equivalent "
      "misclassification-cost behavior under class imbalance"};
  app.require_subcommand(1);

  // metrics
  auto* metrics = app.add_subcommand(
      "metrics", "Evaluate all measures for confusion matrices from a file");
  std::string metrics_input;
  std::string metrics_format = "csv";
  std::vector<double> metrics_betas;
  std::string metrics_out;
  metrics->add_option("--input", metrics_input, "Input file path")
      ->required()
      ->check(CLI::ExistingFile);
  metrics->add_option("--format", metrics_format, "Input format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  metrics->add_option("--beta", metrics_betas,
                      "Additionally evaluate F-beta for each given beta");
  metrics->add_option("--out", metrics_out,
                      "Write the report here instead of stdout");

  // costs
  auto* costs = app.add_subcommand(
      "costs", "Equivalent cost functions of a measure as p2 varies");
  std::string costs_measure;
  double costs_p2 = 0.0;
  int costs_grid = 0;
  costs->add_option("--measure", costs_measure, "Measure name (e.g. ber, f1)")
      ->required();
  auto* p2_opt = costs->add_option("--p2", costs_p2, "Single p2 value");
  auto* grid_opt = costs->add_option(
      "--p2-grid", costs_grid, "Number of log-spaced p2 points in [1e-3, 0.5]");
  p2_opt->excludes(grid_opt);

  // scenario1
  auto* scenario1 = app.add_subcommand(
      "scenario1",
      "Fixed-population scenario: exact cost values for ber and f1");
  double scenario1_n = 10000.0;
  std::string scenario1_format = "csv";
  std::string scenario1_out;
  scenario1->add_option("--n", scenario1_n, "Sample total")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scenario1->add_option("--format", scenario1_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scenario1->add_option("--out", scenario1_out,
                        "Write the artifact here instead of stdout");

  // scenario2
  auto* scenario2 = app.add_subcommand(
      "scenario2",
      "Gaussian scenario: measure-optimal decision boundaries over a p2 sweep");
  GaussianScenario base;
  std::string scenario2_p2_list;
  std::string scenario2_measures;
  std::string scenario2_format = "csv";
  std::string scenario2_out;
  scenario2->add_option("--mu1", base.mu1, "Mean of class 1")
      ->capture_default_str();
  scenario2->add_option("--mu2", base.mu2, "Mean of class 2")
      ->capture_default_str();
  scenario2->add_option("--sigma1", base.sigma1, "Std dev of class 1")
      ->capture_default_str();
  scenario2->add_option("--sigma2", base.sigma2, "Std dev of class 2")
      ->capture_default_str();
  scenario2->add_option("--p2-list", scenario2_p2_list,
                        "Comma-separated p2 sweep values");
  scenario2->add_option("--measures", scenario2_measures,
                        "Comma-separated measure names");
  scenario2->add_option("--format", scenario2_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scenario2->add_option("--out", scenario2_out,
                        "Write the artifact here instead of stdout");

  // figures
  auto* figures = app.add_subcommand(
      "figures", "Plot-ready series for the cost and sweep figures");
  int figures_which = 0;
  std::string figures_format = "csv";
  std::string figures_out;
  figures->add_option("--which", figures_which, "Figure number")
      ->required()
      ->check(CLI::IsMember({3, 4, 5}));
  figures->add_option("--format", figures_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  figures->add_option("--out", figures_out,
                      "Write the artifact here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*metrics) {
      return run_metrics(metrics_input, metrics_format, metrics_betas,
                         metrics_out);
    }
    if (*costs) {
      return run_costs(costs_measure,
                       p2_opt->count() ? std::optional(costs_p2) : std::nullopt,
                       grid_opt->count() ? std::optional(costs_grid)
                                         : std::nullopt);
    }
    if (*scenario1) {
      return run_scenario1(scenario1_n, scenario1_format, scenario1_out);
    }
    if (*scenario2) {
      std::vector<double> p2_list(kScenario2P2.begin(), kScenario2P2.end());
      if (!scenario2_p2_list.empty()) {
        p2_list = parse_double_list(scenario2_p2_list);
      }
      std::vector<MeasureId> ids(kScenario2Measures.begin(),
                                 kScenario2Measures.end());
      if (!scenario2_measures.empty()) {
        ids = parse_measure_list(scenario2_measures);
      }
      return run_scenario2(base, ids, p2_list, scenario2_format, scenario2_out);
    }
    if (*figures) {
      return run_figures(figures_which, figures_format, figures_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedMeasure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
