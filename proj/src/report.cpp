#include "imbacost/report.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace imbacost {

namespace {

ClassRates scenario1_rates(double p2) {
  const double p1 = 1.0 - p2;
  const double e1 = kScenario1E1;
  const double e2 = p2 / 2.0;
  return ClassRates(p1 - e1, e1, e2, p2 - e2);
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
  if (const auto* text = std::get_if<std::string>(&cell)) return *text;
  const double v = std::get<double>(cell);
  if (!std::isfinite(v)) return format_value(v);
  return v;
}

std::string cell_to_csv(const Cell& cell) {
  if (const auto* text = std::get_if<std::string>(&cell)) return *text;
  return format_value(std::get<double>(cell));
}

nlohmann::ordered_json value_to_json(double v) {
  if (!std::isfinite(v)) return format_value(v);
  return nlohmann::ordered_json(v);
}

std::vector<SweepEntry> sweep_or_throw(const GaussianScenario& base,
                                       std::span<const MeasureId> ids,
                                       std::span<const double> p2_list) {
  base.validate();
  for (double p2 : p2_list) {
    if (!(p2 > 0.0 && p2 < 1.0)) {
      throw DomainError("sweep p2 values must lie strictly between 0 and 1");
    }
  }
  auto entries = sweep(base, ids, p2_list);
  for (const SweepEntry& entry : entries) {
    if (!entry.ok) {
      throw NonFinite("no solution for " +
                      std::string(measure_name(entry.id)) + " at p2=" +
                      format_value(entry.p2) + ": " + entry.error);
    }
  }
  return entries;
}

std::vector<MeasureId> default_scenario2_ids() {
  return {kScenario2Measures.begin(), kScenario2Measures.end()};
}

} // namespace

Table table2(double n) {
  Table t;
  t.schema = "table2";
  t.columns.push_back("measure");
  for (double p2 : kScenario1P2) t.columns.push_back(format_value(p2));

  std::vector<ClassRates> rates;
  for (double p2 : kScenario1P2) {
    // Round-trip through counts so the sample total is honored.
    rates.push_back(normalize(denormalize(scenario1_rates(p2), n)));
  }

  const CostProfile ber_profile = cost_profile(Measure::BalancedError);
  std::vector<Cell> ber{std::string("ber")};
  std::vector<Cell> ber_l12{std::string("ber_lambda12")};
  std::vector<Cell> ber_l21{std::string("ber_lambda21")};
  std::vector<Cell> f1{std::string("f1")};
  std::vector<Cell> f1_l12{std::string("f1_lambda12")};
  std::vector<Cell> f1_l21{std::string("f1_lambda21")};
  for (const ClassRates& r : rates) {
    const auto [l12, l21] = eval_costs(ber_profile, r.p2());
    const ApparentCosts apparent = apparent_costs_fbeta(r, 1.0);
    ber.emplace_back(evaluate(Measure::BalancedError, r).value);
    ber_l12.emplace_back(l12);
    ber_l21.emplace_back(l21);
    f1.emplace_back(evaluate(Measure::F1, r).value);
    f1_l12.emplace_back(apparent.lambda12);
    f1_l21.emplace_back(apparent.lambda21);
  }
  t.rows = {ber, ber_l12, ber_l21, f1, f1_l12, f1_l21};
  return t;
}

Table table3(const GaussianScenario& base, std::span<const MeasureId> ids,
             std::span<const double> p2_list) {
  Table t;
  t.schema = "table3";
  t.columns = {"measure", "p2", "value", "x_b", "e1_over_p1", "e2_over_p2"};
  for (const SweepEntry& entry : sweep_or_throw(base, ids, p2_list)) {
    const OptimumSolution& sol = entry.solution;
    t.rows.push_back({std::string(measure_name(entry.id)), entry.p2, sol.value,
                      sol.x_b, sol.e1_over_p1, sol.e2_over_p2});
  }
  return t;
}

Table table3() {
  const auto ids = default_scenario2_ids();
  return table3(GaussianScenario{}, ids, kScenario2P2);
}

std::vector<Series> fig3_series(std::span<const double> p2_grid) {
  for (double p2 : p2_grid) {
    if (!(p2 > 0.0 && p2 < 1.0)) {
      throw DomainError("cost functions are defined on 0 < p2 < 1");
    }
  }
  const std::vector<double> grid(p2_grid.begin(), p2_grid.end());
  auto make = [&](std::string label, auto f) {
    Series s{std::move(label), grid, {}, "p2", "lambda"};
    s.y.reserve(grid.size());
    for (double p2 : grid) s.y.push_back(f(p2));
    return s;
  };
  return {
      make("1/p2", [](double p2) { return cost_lambda21(CostType::II, p2); }),
      make("1/(1-p2)",
           [](double p2) { return cost_lambda12(CostType::III, p2); }),
      make("1/(p2(1-p2))",
           [](double p2) { return cost_lambda12(CostType::IV, p2); }),
      make("1", [](double p2) { return cost_lambda12(CostType::I, p2); }),
  };
}

std::vector<Series> fig4_series() {
  const std::vector<double> grid(kScenario1P2.begin(), kScenario1P2.end());
  Series f1_lambda{"f1_lambda", grid, {}, "p2", "lambda"};
  Series ber_l21{"ber_lambda21", grid, {}, "p2", "lambda"};
  Series ber_l12{"ber_lambda12", grid, {}, "p2", "lambda"};
  for (double p2 : grid) {
    f1_lambda.y.push_back(apparent_costs_fbeta(scenario1_rates(p2), 1.0).lambda12);
    ber_l21.y.push_back(cost_lambda21(CostType::III, p2));
    ber_l12.y.push_back(cost_lambda12(CostType::III, p2));
  }
  return {f1_lambda, ber_l21, ber_l12};
}

std::vector<Series> fig5_series(const GaussianScenario& base,
                                std::span<const MeasureId> ids,
                                std::span<const double> p2_list) {
  std::vector<Series> out;
  const auto entries = sweep_or_throw(base, ids, p2_list);
  for (const MeasureId& id : ids) {
    Series s{std::string(measure_name(id)), {}, {}, "p1_over_p2",
             "e2_over_p2"};
    for (const SweepEntry& entry : entries) {
      if (!(entry.id == id)) continue;
      s.x.push_back((1.0 - entry.p2) / entry.p2);
      s.y.push_back(entry.solution.e2_over_p2);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Series> fig5_series() {
  const auto ids = default_scenario2_ids();
  return fig5_series(GaussianScenario{}, ids, kScenario2P2);
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_to_csv(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(std::span<const Series> series) {
  std::string out = "series";
  if (!series.empty()) {
    out += ',' + series.front().x_name + ',' + series.front().y_name;
  }
  out += '\n';
  for (const Series& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out += s.label;
      out += ',';
      out += format_value(s.x[i]);
      out += ',';
      out += format_value(s.y[i]);
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["schema"] = table.schema;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      record[table.columns[i]] = cell_to_json(row[i]);
    }
    doc["rows"].push_back(std::move(record));
  }
  return doc.dump(2);
}

std::string to_json(std::string_view schema, std::span<const Series> series) {
  nlohmann::ordered_json doc;
  doc["schema"] = std::string(schema);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const Series& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      nlohmann::ordered_json record;
      record["series"] = s.label;
      record[s.x_name] = value_to_json(s.x[i]);
      record[s.y_name] = value_to_json(s.y[i]);
      doc["rows"].push_back(std::move(record));
    }
  }
  return doc.dump(2);
}

} // namespace imbacost
