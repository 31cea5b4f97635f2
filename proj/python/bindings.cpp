#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "imbacost/confusion.hpp"
#include "imbacost/costs.hpp"
#include "imbacost/gaussian.hpp"
#include "imbacost/measures.hpp"
#include "imbacost/report.hpp"

namespace py = pybind11;
using namespace imbacost;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary-classification performance measures and their "
            "misclassification-cost behavior under class imbalance";

  py::register_exception<Error>(m, "Error");
  py::register_exception<EmptyMatrix>(m, "EmptyMatrixError");
  py::register_exception<MissingClass>(m, "MissingClassError");
  py::register_exception<InvalidRates>(m, "InvalidRatesError");
  py::register_exception<DegenerateMeasure>(m, "DegenerateMeasureError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
      .def(py::init<double, double, double, double>(), py::arg("tn") = 0.0,
           py::arg("fp") = 0.0, py::arg("fn") = 0.0, py::arg("tp") = 0.0)
      .def_readwrite("tn", &ConfusionMatrix::tn)
      .def_readwrite("fp", &ConfusionMatrix::fp)
      .def_readwrite("fn", &ConfusionMatrix::fn)
      .def_readwrite("tp", &ConfusionMatrix::tp)
      .def("total", &ConfusionMatrix::total)
      .def("__repr__", [](const ConfusionMatrix& m1) {
        std::ostringstream out;
        out << "ConfusionMatrix(tn=" << m1.tn << ", fp=" << m1.fp
            << ", fn=" << m1.fn << ", tp=" << m1.tp << ")";
        return out.str();
      });

  py::class_<ClassRates>(m, "ClassRates")
      .def(py::init<double, double, double, double>(), py::arg("cr1"),
           py::arg("e1"), py::arg("e2"), py::arg("cr2"))
      .def_property_readonly("cr1", &ClassRates::cr1)
      .def_property_readonly("e1", &ClassRates::e1)
      .def_property_readonly("e2", &ClassRates::e2)
      .def_property_readonly("cr2", &ClassRates::cr2)
      .def_property_readonly("p1", &ClassRates::p1)
      .def_property_readonly("p2", &ClassRates::p2)
      .def("__repr__", [](const ClassRates& r) {
        std::ostringstream out;
        out << "ClassRates(cr1=" << r.cr1() << ", e1=" << r.e1()
            << ", e2=" << r.e2() << ", cr2=" << r.cr2() << ")";
        return out.str();
      });

  m.def("normalize", &normalize, py::arg("matrix"));
  m.def("denormalize", &denormalize, py::arg("rates"), py::arg("n"));
  m.def("skew_ratio", &skew_ratio, py::arg("rates"));

  py::enum_<Measure>(m, "Measure")
      .value("AT", Measure::TotalAccuracy)
      .value("A_PR", Measure::ArithmeticPR)
      .value("G_PR", Measure::GeometricPR)
      .value("Q_PR", Measure::QuadraticPR)
      .value("F1", Measure::F1)
      .value("AUC_B", Measure::BalancedAccuracy)
      .value("G_AI", Measure::GeometricAcc)
      .value("Q_AI", Measure::QuadraticAcc)
      .value("H_AI", Measure::HarmonicAcc)
      .value("BER", Measure::BalancedError)
      .value("MCC", Measure::Mcc)
      .value("KAPPA", Measure::Kappa)
      .value("FBETA", Measure::FBeta);

  py::class_<MeasureId>(m, "MeasureId")
      .def(py::init<Measure>(), py::arg("kind"))
      .def_static("fbeta", &MeasureId::fbeta, py::arg("beta"))
      .def_readonly("kind", &MeasureId::kind)
      .def_readonly("beta", &MeasureId::beta)
      .def("parametric", &MeasureId::parametric)
      .def("__eq__",
           [](const MeasureId& a, const MeasureId& b) { return a == b; })
      .def("__repr__", [](const MeasureId& id) {
        std::string out = "MeasureId(" + std::string(measure_name(id));
        if (id.parametric()) out += ", beta=" + format_value(id.beta);
        return out + ")";
      });
  py::implicitly_convertible<Measure, MeasureId>();

  py::enum_<Orientation>(m, "Orientation")
      .value("MAXIMIZE", Orientation::Maximize)
      .value("MINIMIZE", Orientation::Minimize);

  py::class_<MeasureValue>(m, "MeasureValue")
      .def_readonly("id", &MeasureValue::id)
      .def_readonly("value", &MeasureValue::value)
      .def_readonly("orientation", &MeasureValue::orientation)
      .def_readonly("degenerate", &MeasureValue::degenerate)
      .def("__repr__", [](const MeasureValue& mv) {
        return "MeasureValue(" + std::string(measure_name(mv.id)) + "=" +
               format_value(mv.value) + ")";
      });

  m.def("measure_name",
        [](MeasureId id) { return std::string(measure_name(id)); },
        py::arg("id"));
  m.def("measure_from_name", &measure_from_name, py::arg("name"));
  m.def("orientation_of", &orientation_of, py::arg("id"));
  m.def("minimum_value", &minimum_value, py::arg("id"));
  m.def("precision_recall", &precision_recall, py::arg("rates"));
  m.def("accuracy_rates", &accuracy_rates, py::arg("rates"));
  m.def("evaluate", &evaluate, py::arg("id"), py::arg("rates"));
  m.def(
      "evaluate_all",
      [](const ClassRates& r, const std::vector<double>& betas) {
        return evaluate_all(r, betas);
      },
      py::arg("rates"), py::arg("betas") = std::vector<double>{});

  py::enum_<CostType>(m, "CostType")
      .value("I", CostType::I)
      .value("II", CostType::II)
      .value("III", CostType::III)
      .value("IV", CostType::IV);

  py::enum_<Exactness>(m, "Exactness")
      .value("EXACT", Exactness::Exact)
      .value("APPROXIMATE_LOWER_BOUND", Exactness::ApproximateLowerBound)
      .value("APPROXIMATE_UNKNOWN_BOUND", Exactness::ApproximateUnknownBound);

  py::enum_<Verdict>(m, "Verdict")
      .value("PROPER", Verdict::Proper)
      .value("IMPROPER", Verdict::Improper);

  py::class_<CostProfile>(m, "CostProfile")
      .def_readonly("id", &CostProfile::id)
      .def_readonly("cost_type", &CostProfile::cost_type)
      .def_readonly("exactness", &CostProfile::exactness)
      .def_readonly("verdict", &CostProfile::verdict)
      .def("lambda12", &CostProfile::lambda12, py::arg("p2"))
      .def("lambda21", &CostProfile::lambda21, py::arg("p2"))
      .def("bound_condition", &CostProfile::bound_condition, py::arg("e1"),
           py::arg("e2"));

  py::class_<ApparentCosts>(m, "ApparentCosts")
      .def_readonly("lambda12", &ApparentCosts::lambda12)
      .def_readonly("lambda21", &ApparentCosts::lambda21)
      .def_readonly("beta", &ApparentCosts::beta);

  m.def("cost_profile", &cost_profile, py::arg("id"));
  m.def("eval_costs", &eval_costs, py::arg("profile"), py::arg("p2"));
  m.def("apparent_costs_fbeta", &apparent_costs_fbeta, py::arg("rates"),
        py::arg("beta"));
  m.def("risk_transform", &risk_transform, py::arg("id"), py::arg("rates"));
  m.def("verify_cost_identity", &verify_cost_identity, py::arg("id"),
        py::arg("rates"));
  m.def("bound_condition_holds", &bound_condition_holds, py::arg("id"),
        py::arg("rates"));

  py::class_<GaussianScenario>(m, "GaussianScenario")
      .def(py::init([](double mu1, double mu2, double sigma1, double sigma2,
                       double p2) {
             GaussianScenario s{mu1, mu2, sigma1, sigma2, p2};
             s.validate();
             return s;
           }),
           py::arg("mu1") = -1.0, py::arg("mu2") = 1.0,
           py::arg("sigma1") = 1.0, py::arg("sigma2") = 1.0,
           py::arg("p2") = 0.5)
      .def_readwrite("mu1", &GaussianScenario::mu1)
      .def_readwrite("mu2", &GaussianScenario::mu2)
      .def_readwrite("sigma1", &GaussianScenario::sigma1)
      .def_readwrite("sigma2", &GaussianScenario::sigma2)
      .def_readwrite("p2", &GaussianScenario::p2)
      .def("with_p2", &GaussianScenario::with_p2, py::arg("p2"));

  py::class_<OptimumSolution>(m, "OptimumSolution")
      .def_readonly("id", &OptimumSolution::id)
      .def_readonly("x_b", &OptimumSolution::x_b)
      .def_readonly("value", &OptimumSolution::value)
      .def_readonly("e1_over_p1", &OptimumSolution::e1_over_p1)
      .def_readonly("e2_over_p2", &OptimumSolution::e2_over_p2)
      .def("__repr__", [](const OptimumSolution& s) {
        return "OptimumSolution(" + std::string(measure_name(s.id)) +
               ", x_b=" + format_value(s.x_b) +
               ", value=" + format_value(s.value) + ")";
      });

  py::class_<SweepEntry>(m, "SweepEntry")
      .def_readonly("id", &SweepEntry::id)
      .def_readonly("p2", &SweepEntry::p2)
      .def_readonly("solution", &SweepEntry::solution)
      .def_readonly("ok", &SweepEntry::ok)
      .def_readonly("error", &SweepEntry::error);

  m.def("normal_cdf", &normal_cdf, py::arg("z"));
  m.def("normal_cdf_complement", &normal_cdf_complement, py::arg("z"));
  m.def("rates_at", &rates_at, py::arg("scenario"), py::arg("x_b"));
  m.def("bayes_boundary_equal_variance", &bayes_boundary_equal_variance,
        py::arg("scenario"));
  m.def("optimize_boundary", &optimize_boundary, py::arg("scenario"),
        py::arg("id"));
  m.def(
      "sweep",
      [](const GaussianScenario& base, const std::vector<MeasureId>& ids,
         const std::vector<double>& p2_list) {
        return sweep(base, ids, p2_list);
      },
      py::arg("scenario"), py::arg("ids"), py::arg("p2_list"));

  py::class_<Series>(m, "Series")
      .def_readonly("label", &Series::label)
      .def_readonly("x", &Series::x)
      .def_readonly("y", &Series::y)
      .def_readonly("x_name", &Series::x_name)
      .def_readonly("y_name", &Series::y_name);

  py::class_<Table>(m, "Table")
      .def_readonly("schema", &Table::schema)
      .def_readonly("columns", &Table::columns)
      .def_readonly("rows", &Table::rows);

  m.def("table2", &table2, py::arg("n") = 10000.0);
  m.def("table3", py::overload_cast<>(&table3));
  m.def(
      "table3",
      [](const GaussianScenario& base, const std::vector<MeasureId>& ids,
         const std::vector<double>& p2_list) {
        return table3(base, ids, p2_list);
      },
      py::arg("scenario"), py::arg("ids"), py::arg("p2_list"));
  m.def("fig3_series", [](const std::vector<double>& grid) {
    return fig3_series(grid);
  });
  m.def("fig4_series", &fig4_series);
  m.def("fig5_series", py::overload_cast<>(&fig5_series));
  m.def("format_value", &format_value, py::arg("v"));
  m.def("table_to_csv",
        [](const Table& t) { return to_csv(t); }, py::arg("table"));
  m.def("table_to_json",
        [](const Table& t) { return to_json(t); }, py::arg("table"));
  m.def(
      "series_to_csv",
      [](const std::vector<Series>& s) { return to_csv(s); },
      py::arg("series"));
  m.def(
      "series_to_json",
      [](const std::string& schema, const std::vector<Series>& s) {
        return to_json(schema, s);
      },
      py::arg("schema"), py::arg("series"));
}
