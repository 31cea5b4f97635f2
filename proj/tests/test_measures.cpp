#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "imbacost/measures.hpp"
#include "support.hpp"

using namespace imbacost;

namespace {

const ClassRates kSkewed(0.8, 0.1, 0.05, 0.05);   // p2 = 0.1, e1 = 0.1
const ClassRates kBalanced(0.4, 0.1, 0.25, 0.25); // p2 = 0.5, e2 = 0.25
const ClassRates kSymmetric(0.4, 0.1, 0.1, 0.4);
const ClassRates kPerfect(0.6, 0.0, 0.0, 0.4);

double value_of(Measure m, const ClassRates& r) {
  return evaluate(m, r).value;
}

} // namespace

TEST_CASE("precision and recall") {
  const auto [p, r] = precision_recall(kSkewed);
  CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r == doctest::Approx(0.5).epsilon(1e-14));

  const auto [pp, rp] = precision_recall(kPerfect);
  CHECK(pp == 1.0);
  CHECK(rp == 1.0);

  // Nothing predicted positive: P = 0 by convention.
  const auto [p0, r0] = precision_recall(ClassRates(0.5, 0.0, 0.5, 0.0));
  CHECK(p0 == 0.0);
  CHECK(r0 == 0.0);
}

TEST_CASE("per-class accuracy rates") {
  const auto [a1, a2] = accuracy_rates(kBalanced);
  CHECK(a1 == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(a2 == doctest::Approx(0.5).epsilon(1e-14));

  const auto [p1, p2] = accuracy_rates(kPerfect);
  CHECK(p1 == 1.0);
  CHECK(p2 == 1.0);

  // Whole minority misclassified.
  const auto [b1, b2] = accuracy_rates(ClassRates(0.5, 0.2, 0.3, 0.0));
  CHECK(b1 == doctest::Approx(0.5 / 0.7).epsilon(1e-14));
  CHECK(b2 == 0.0);
}

TEST_CASE("reference values on the skewed population") {
  CHECK(value_of(Measure::BalancedError, kSkewed) ==
        doctest::Approx(0.306).epsilon(2e-3)); // exact: 0.30555...
  CHECK(value_of(Measure::F1, kSkewed) == doctest::Approx(0.4).epsilon(1e-12));

  const ClassRates rarer(0.85, 0.1, 0.025, 0.025); // p2 = 0.05
  CHECK(value_of(Measure::F1, rarer) ==
        doctest::Approx(2.0 / 7.0).epsilon(1e-12)); // displayed 0.286
}

TEST_CASE("matthews and kappa hand-evaluated values") {
  CHECK(value_of(Measure::Mcc, kSymmetric) ==
        doctest::Approx(0.6).epsilon(1e-14));
  CHECK(value_of(Measure::Kappa, kSymmetric) ==
        doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("all twelve measures at the perfect classifier") {
  for (const MeasureValue& mv : evaluate_all(kPerfect)) {
    CHECK_FALSE(mv.degenerate);
    if (mv.id.kind == Measure::BalancedError) {
      CHECK(mv.value == 0.0);
    } else {
      CHECK(mv.value == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("mcc zero-denominator convention") {
  // Everything predicted negative: empty positive margin, numerator 0.
  CHECK(value_of(Measure::Mcc, ClassRates(0.5, 0.0, 0.5, 0.0)) == 0.0);
  // Everything predicted positive.
  CHECK(value_of(Measure::Mcc, ClassRates(0.0, 0.5, 0.0, 0.5)) == 0.0);
}

TEST_CASE("mcc reaches -1 on total balanced misclassification") {
  CHECK(value_of(Measure::Mcc, ClassRates(0.0, 0.5, 0.5, 0.0)) ==
        doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("batch evaluation follows the fixed measure order") {
  const auto all = evaluate_all(kBalanced);
  REQUIRE(all.size() == kMeasureOrder.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].id.kind == kMeasureOrder[i]);
  }
  CHECK(all[9].id.kind == Measure::BalancedError);
  CHECK(all[9].value == doctest::Approx(0.35).epsilon(1e-12));
  CHECK(all[4].id.kind == Measure::F1);
  CHECK(all[4].value == doctest::Approx(10.0 / 17.0).epsilon(1e-12)); // 0.588

  const double betas[] = {0.5, 2.0};
  const auto with_betas = evaluate_all(kBalanced, betas);
  REQUIRE(with_betas.size() == 14);
  CHECK(with_betas[12].id.parametric());
  CHECK(with_betas[12].id.beta == 0.5);
  CHECK(with_betas[13].id.beta == 2.0);
}

TEST_CASE("all eight means coincide on a symmetric matrix") {
  for (Measure m : {Measure::ArithmeticPR, Measure::GeometricPR,
                    Measure::QuadraticPR, Measure::F1,
                    Measure::BalancedAccuracy, Measure::GeometricAcc,
                    Measure::QuadraticAcc, Measure::HarmonicAcc}) {
    CHECK(value_of(m, kSymmetric) == doctest::Approx(0.8).epsilon(1e-12));
  }
}

TEST_CASE("f-beta examples") {
  // P = 1/3, R = 1/2 on the skewed population.
  CHECK(evaluate(MeasureId::fbeta(2.0), kSkewed).value ==
        doctest::Approx(5.0 / 11.0).epsilon(1e-12));
  CHECK(evaluate(MeasureId::fbeta(0.5), kSkewed).value ==
        doctest::Approx(5.0 / 14.0).epsilon(1e-12));
  CHECK_THROWS_AS(MeasureId::fbeta(0.0), DomainError);
  CHECK_THROWS_AS(MeasureId::fbeta(-1.0), DomainError);
}

TEST_CASE("measure names round-trip") {
  for (Measure m : kMeasureOrder) {
    const auto parsed = measure_from_name(measure_name(m));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == m);
  }
  CHECK(*measure_from_name("BER") == Measure::BalancedError);
  CHECK(*measure_from_name("h_pr") == Measure::F1);
  CHECK(*measure_from_name("a_ai") == Measure::BalancedAccuracy);
  CHECK_FALSE(measure_from_name("nope").has_value());
}

TEST_CASE("orientation and minimum") {
  CHECK(orientation_of(Measure::BalancedError) == Orientation::Minimize);
  for (Measure m : kMeasureOrder) {
    if (m == Measure::BalancedError) continue;
    CHECK(orientation_of(m) == Orientation::Maximize);
  }
  CHECK(minimum_value(Measure::Mcc) == -1.0);
  CHECK(minimum_value(Measure::Kappa) == -1.0);
  CHECK(minimum_value(Measure::F1) == 0.0);
  CHECK(minimum_value(MeasureId::fbeta(2.0)) == 0.0);
}

// Property suite over randomized valid rate tuples. The range check runs
// 1e5 samples; the identities ride along on the same draw.
TEST_CASE("randomized invariants") {
  testsupport::RatesGenerator gen;
  constexpr int kSamples = 100000;
  for (int i = 0; i < kSamples; ++i) {
    const ClassRates r = gen.next_full();

    const double a_pr = value_of(Measure::ArithmeticPR, r);
    const double g_pr = value_of(Measure::GeometricPR, r);
    const double q_pr = value_of(Measure::QuadraticPR, r);
    const double h_pr = value_of(Measure::F1, r);
    REQUIRE(h_pr <= g_pr + 1e-12);
    REQUIRE(g_pr <= a_pr + 1e-12);
    REQUIRE(a_pr <= q_pr + 1e-12);

    const double a_ai = value_of(Measure::BalancedAccuracy, r);
    const double g_ai = value_of(Measure::GeometricAcc, r);
    const double q_ai = value_of(Measure::QuadraticAcc, r);
    const double h_ai = value_of(Measure::HarmonicAcc, r);
    REQUIRE(h_ai <= g_ai + 1e-12);
    REQUIRE(g_ai <= a_ai + 1e-12);
    REQUIRE(a_ai <= q_ai + 1e-12);

    const double ber = value_of(Measure::BalancedError, r);
    REQUIRE(std::abs(ber + a_ai - 1.0) <= 1e-12);

    const auto [a1, a2] = accuracy_rates(r);
    REQUIRE(std::abs(value_of(Measure::TotalAccuracy, r) -
                     (r.p1() * a1 + r.p2() * a2)) <= 1e-12);

    // A2 is the recall.
    REQUIRE(a2 == precision_recall(r).second);

    for (double v : {a_pr, g_pr, q_pr, h_pr, a_ai, g_ai, q_ai, h_ai, ber,
                     value_of(Measure::TotalAccuracy, r)}) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
    }
    const double mcc = value_of(Measure::Mcc, r);
    const double kappa = value_of(Measure::Kappa, r);
    REQUIRE(mcc >= -1.0);
    REQUIRE(mcc <= 1.0);
    REQUIRE(kappa >= -1.0);
    REQUIRE(kappa <= 1.0);

    // F-beta at beta = 1 is bit-identical to F1.
    REQUIRE(evaluate(MeasureId::fbeta(1.0), r).value == h_pr);
  }
}
