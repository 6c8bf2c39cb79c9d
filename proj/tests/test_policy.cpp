#include <cmath>
#include <vector>

#include <doctest.h>

#include <qresb/policy.hpp>

using namespace qresb;

namespace {
const CoordinationGame kRef(6.0, 7.0, 1.0, 2.0);
const BehavioralParams kSharp(1.0, 1.5);
const BehavioralParams kSoft(0.3, 1.5);
}  // namespace

TEST_CASE("threshold tax closed form") {
  CHECK(threshold_tax(kRef, kSoft) == 0.5);
  CHECK(threshold_tax(kRef, BehavioralParams(0.3, 1.0)) == 0.0);
  // Symmetric gains (alpha == gamma) with no switching cost: threshold 0.
  const CoordinationGame sym(4.0, 5.0, 2.0, 1.0);
  CHECK(sym.alpha == sym.gamma);
  CHECK(threshold_tax(sym, BehavioralParams(0.3, 0.0)) == 0.0);
  // May be negative when switching is already attractive.
  CHECK(threshold_tax(kRef, BehavioralParams(0.3, 0.0)) == -1.0);
  // beta never enters.
  for (const double beta : {0.0, 0.01, 1.0, 50.0}) {
    CHECK(threshold_tax(kRef, BehavioralParams(beta, 1.5)) == 0.5);
  }
}

TEST_CASE("regime classification around the threshold") {
  CHECK(classify_regime(kRef, kSoft, 0.0) == RegimeLabel::status_quo_persists);
  CHECK(classify_regime(kRef, kSoft, 0.25) == RegimeLabel::status_quo_persists);
  CHECK(classify_regime(kRef, kSoft, 0.5) == RegimeLabel::indifferent);
  CHECK(classify_regime(kRef, kSoft, 0.75) == RegimeLabel::transition);
  CHECK(classify_regime(kRef, kSoft, 1.0) == RegimeLabel::transition);

  // Just off the threshold the equilibrium moves about 0.3 * dt, far inside
  // the default 1e-9 band.
  CHECK(classify_regime(kRef, kSoft, 0.5 + 1e-12) == RegimeLabel::indifferent);
  CHECK(classify_regime(kRef, kSoft, 0.5 + 1e-6) == RegimeLabel::transition);

  CHECK_THROWS_AS(classify_regime(kRef, kSharp, 0.0), NotContraction);
  CHECK_THROWS_AS(classify_regime(kRef, kSoft, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(classify_regime(kRef, kSoft, 0.0, -1e-9), DomainError);
}

TEST_CASE("regime label names") {
  CHECK(to_string(RegimeLabel::status_quo_persists) == "status_quo_persists");
  CHECK(to_string(RegimeLabel::indifferent) == "indifferent");
  CHECK(to_string(RegimeLabel::transition) == "transition");
  CHECK(to_string(SweepParameter::tax) == "t");
  CHECK(to_string(SweepParameter::kappa) == "kappa");
  CHECK(to_string(SweepParameter::beta) == "beta");
}

TEST_CASE("deletion outcome is the all-alternative corner") {
  const DeletionOutcome out = deletion_outcome(kRef);
  CHECK(out.p == 0.0);
  CHECK(out.welfare == 7.0);
  CHECK(out.welfare == welfare(kRef, 0.0));
}

TEST_CASE("welfare gap under a contraction") {
  const auto entries = welfare_gap(kRef, kSoft, 0.5);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].p == 0.5);  // f(1/2) = 1/2 exactly at the threshold
  CHECK(entries[0].gap == 3.0);
  CHECK(entries[0].stable);
}

TEST_CASE("welfare gap enumerates every equilibrium outside the contraction regime") {
  const auto entries = welfare_gap(kRef, kSharp, 0.0);
  REQUIRE(entries.size() == 3);
  const double expected_gaps[] = {0.13509989937, 2.84579703815, 1.03803304087};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(entries[i].gap - expected_gaps[i]) < 1e-6);
    CHECK(entries[i].gap > 0.0);  // deletion dominates every equilibrium
  }
  CHECK(entries[0].stable);
  CHECK_FALSE(entries[1].stable);
  CHECK(entries[2].stable);
}

TEST_CASE("tax sweep rows track the solver") {
  const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  const auto rows = sweep(kRef, kSoft, 0.0, SweepParameter::tax, grid);
  REQUIRE(rows.size() == 5);
  const RegimeLabel expected[] = {RegimeLabel::status_quo_persists, RegimeLabel::status_quo_persists,
                                  RegimeLabel::indifferent, RegimeLabel::transition, RegimeLabel::transition};
  double prev = 1.0;
  for (int i = 0; i < 5; ++i) {
    const auto& row = rows[i];
    CHECK(row.parameter == SweepParameter::tax);
    CHECK(row.value == grid[i]);
    CHECK(row.error.empty());
    REQUIRE(row.regime.has_value());
    CHECK(*row.regime == expected[i]);
    CHECK(row.stable);
    CHECK(row.residual <= 1e-12);
    CHECK(row.p == solve_banach(kRef, kSoft, grid[i]).p);
    CHECK(row.welfare == welfare(kRef, row.p));
    CHECK(row.p < prev);
    prev = row.p;
  }
}

TEST_CASE("beta sweep crosses out of the contraction regime gracefully") {
  const std::vector<double> grid = {0.0, 0.2, 0.4, 1.0};
  const auto rows = sweep(kRef, kSoft, 0.0, SweepParameter::beta, grid);
  // 0.0 and 0.2 are contractions (one row each), 0.4 sits exactly at modulus
  // 1 (still a single fixed point, unclassified), 1.0 has three.
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].value == 0.0);
  CHECK(rows[0].p == 0.5);
  CHECK(rows[0].regime == RegimeLabel::indifferent);
  CHECK(rows[1].value == 0.2);
  CHECK(rows[1].regime.has_value());
  CHECK(rows[2].value == 0.4);
  CHECK_FALSE(rows[2].regime.has_value());
  for (int i = 3; i < 6; ++i) {
    CHECK(rows[i].value == 1.0);
    CHECK_FALSE(rows[i].regime.has_value());
  }
  CHECK(rows[3].p < rows[4].p);
  CHECK(rows[4].p < rows[5].p);
  CHECK(rows[3].stable);
  CHECK_FALSE(rows[4].stable);
  CHECK(rows[5].stable);
}

TEST_CASE("sweep records per-value failures without aborting") {
  const std::vector<double> grid = {0.5, -1.0, 1.5};
  const auto rows = sweep(kRef, kSoft, 0.0, SweepParameter::kappa, grid);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].error.empty());
  CHECK_FALSE(rows[1].error.empty());
  CHECK(std::isnan(rows[1].p));
  CHECK(std::isnan(rows[1].welfare));
  CHECK_FALSE(rows[1].regime.has_value());
  CHECK(rows[2].error.empty());
  CHECK(rows[0].p < rows[2].p);  // switching cost raises the equilibrium share
}

TEST_CASE("sweep argument validation") {
  const std::vector<double> empty;
  CHECK_THROWS_AS(sweep(kRef, kSoft, 0.0, SweepParameter::tax, empty), DomainError);
  const std::vector<double> grid = {0.0, 1.0};
  SolverOptions bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(sweep(kRef, kSoft, 0.0, SweepParameter::tax, grid, bad), DomainError);
  CHECK_THROWS_AS(sweep(kRef, kSoft, -1.0, SweepParameter::kappa, grid), DomainError);
}

TEST_CASE("policy comparison certifies deletion dominance on the reference game") {
  const std::vector<double> taxes = {0.0, 0.5, 1.0, 2.0, 5.0};
  const ComparisonReport report = compare_policies(kRef, kSoft, taxes);
  CHECK(report.threshold == 0.5);
  CHECK(report.deletion_p == 0.0);
  CHECK(report.deletion_welfare == 7.0);
  REQUIRE(report.tax_outcomes.size() == 5);
  REQUIRE(report.welfare_gaps.size() == 5);

  const double expected_gaps[] = {2.9510982507226022, 3.0, 2.6791659974628978, 1.8800982482104985,
                                  0.68084725284171718};
  for (int i = 0; i < 5; ++i) {
    CHECK(report.welfare_gaps[i].t == taxes[i]);
    CHECK(std::abs(report.welfare_gaps[i].gap - expected_gaps[i]) < 1e-9);
    CHECK(report.welfare_gaps[i].gap > 0.0);
  }
  CHECK(report.dominance_certified);
  CHECK_FALSE(report.dominance_violated);
  CHECK(report.note.empty());

  // The gap sequence is NOT monotone in t: it rises from t=0 to t=0.5 because
  // the no-tax equilibrium (p=0.636) sits past the welfare minimum at 0.55.
  CHECK(report.welfare_gaps[0].gap < report.welfare_gaps[1].gap);
}

TEST_CASE("policy comparison with an empty tax list reports deletion only") {
  const ComparisonReport report = compare_policies(kRef, kSoft, std::vector<double>{});
  CHECK(report.tax_outcomes.empty());
  CHECK(report.welfare_gaps.empty());
  CHECK(report.threshold == 0.5);
  CHECK(report.deletion_welfare == 7.0);
  CHECK(report.dominance_certified);  // vacuously: nothing contradicted it
  CHECK_FALSE(report.dominance_violated);
}

TEST_CASE("policy comparison enumerates equilibria outside the contraction regime") {
  const std::vector<double> taxes = {0.0};
  const ComparisonReport report = compare_policies(kRef, kSharp, taxes);
  REQUIRE(report.tax_outcomes.size() == 3);
  for (const auto& o : report.tax_outcomes) {
    CHECK_FALSE(o.regime.has_value());
  }
  REQUIRE(report.welfare_gaps.size() == 1);
  // Worst case over the three equilibria: the low-p one, barely below W(0).
  CHECK(std::abs(report.welfare_gaps[0].gap - 0.13509989937) < 1e-6);
  CHECK(report.dominance_certified);
}

TEST_CASE("policy comparison rejects bad tax lists") {
  const std::vector<double> negative = {0.5, -0.25};
  CHECK_THROWS_AS(compare_policies(kRef, kSoft, negative), DomainError);
}
