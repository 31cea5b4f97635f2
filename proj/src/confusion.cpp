#include "imbacost/confusion.hpp"

#include <cmath>
#include <istream>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace imbacost {

namespace {

bool in_open_unit_interval(double p) { return p > 0.0 && p < 1.0; }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_field(const std::string& field, std::size_t line_no) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &consumed);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": not a number: '" + field + "'");
  }
  if (consumed != field.size()) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": trailing characters in '" + field + "'");
  }
  return value;
}

} // namespace

ClassRates::ClassRates(double cr1, double e1, double e2, double cr2)
    : cr1_(cr1), e1_(e1), e2_(e2), cr2_(cr2) {
  for (double v : {cr1, e1, e2, cr2}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidRates("class rates must be finite and non-negative");
    }
  }
  const double sum = p1() + p2();
  if (std::abs(sum - 1.0) > kRateTolerance) {
    throw InvalidRates("population rates must sum to 1, got " +
                       std::to_string(sum));
  }
  if (!in_open_unit_interval(p1()) || !in_open_unit_interval(p2())) {
    throw MissingClass("both classes need a non-zero population");
  }
}

ClassRates normalize(const ConfusionMatrix& m) {
  for (double v : {m.tn, m.fp, m.fn, m.tp}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidRates("matrix entries must be finite and non-negative");
    }
  }
  const double n = m.total();
  if (n <= 0.0) throw EmptyMatrix("confusion matrix has no samples");
  if (m.tn + m.fp <= 0.0 || m.fn + m.tp <= 0.0) {
    throw MissingClass("both classes need a non-zero population");
  }
  return ClassRates(m.tn / n, m.fp / n, m.fn / n, m.tp / n);
}

ConfusionMatrix denormalize(const ClassRates& r, double n) {
  if (!(n > 0.0)) throw DomainError("sample total must be positive");
  return ConfusionMatrix{n * r.cr1(), n * r.e1(), n * r.e2(), n * r.cr2()};
}

double skew_ratio(const ClassRates& r) { return r.p1() / r.p2(); }

std::vector<ConfusionMatrix> load_matrices_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: missing header");
  if (trim(line) != "tn,fp,fn,tp") {
    throw ParseError("line 1: expected header 'tn,fp,fn,tp', got '" +
                     trim(line) + "'");
  }
  std::vector<ConfusionMatrix> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::stringstream row(line);
    std::string field;
    double values[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(row, field, ',')) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 4 fields");
      }
      values[i] = parse_field(trim(field), line_no);
    }
    if (std::getline(row, field, ',')) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 4 fields");
    }
    out.push_back(ConfusionMatrix{values[0], values[1], values[2], values[3]});
  }
  return out;
}

std::vector<ConfusionMatrix> load_matrices_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("expected a top-level JSON array");
  std::vector<ConfusionMatrix> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& obj = doc[i];
    if (!obj.is_object()) {
      throw ParseError("record " + std::to_string(i) + ": expected an object");
    }
    ConfusionMatrix m;
    for (auto [key, dst] : {std::pair{"tn", &m.tn}, std::pair{"fp", &m.fp},
                            std::pair{"fn", &m.fn}, std::pair{"tp", &m.tp}}) {
      if (!obj.contains(key) || !obj[key].is_number()) {
        throw ParseError("record " + std::to_string(i) + ": missing numeric '" +
                         key + "'");
      }
      *dst = obj[key].get<double>();
    }
    out.push_back(m);
  }
  return out;
}

std::vector<ConfusionMatrix> load_matrices(const std::string& path,
                                           std::string_view format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  if (format == "csv") return load_matrices_csv(in);
  if (format == "json") return load_matrices_json(in);
  throw DomainError("unknown input format '" + std::string(format) + "'");
}

} // namespace imbacost
