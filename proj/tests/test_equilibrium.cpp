#include <cmath>
#include <limits>

#include <doctest.h>

#include <qresb/equilibrium.hpp>
#include <qresb/rng.hpp>

using namespace qresb;

namespace {

const CoordinationGame kRef(6.0, 7.0, 1.0, 2.0);
const BehavioralParams kSharp(1.0, 1.5);  // modulus 2.5: three fixed points
const BehavioralParams kSoft(0.3, 1.5);   // modulus 0.75: unique fixed point

CoordinationGame random_game(Rng& rng) {
  for (;;) {
    const double a = rng.uniform(0.0, 10.0);
    const double b = rng.uniform(0.0, 10.0);
    const double c = rng.uniform(0.0, 10.0);
    const double d = rng.uniform(0.0, 10.0);
    if (a > c && b > d && b > a) return CoordinationGame(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("logit response basics") {
  CHECK(logit_prob_x(1.0, 0.0) == 0.5);
  CHECK(logit_prob_x(0.0, 123.0) == 0.5);  // zero precision ignores payoffs
  CHECK(std::abs(logit_prob_x(1.0, 4.5) - 0.010986942630593180) < 1e-15);
  CHECK(std::abs(logit_prob_x(1.0, -4.5) - (1.0 - 0.010986942630593180)) < 1e-15);
  CHECK_THROWS_AS(logit_prob_x(-1.0, 0.5), DomainError);
}

TEST_CASE("logit response stays strictly inside (0, 1) at extreme arguments") {
  for (const double delta : {800.0, 5000.0, 1e7}) {
    const double lo = logit_prob_x(1.0, delta);
    const double hi = logit_prob_x(1.0, -delta);
    CHECK(lo > 0.0);
    CHECK(lo < 1.0);
    CHECK(hi > 0.0);
    CHECK(hi < 1.0);
    CHECK(lo < 1e-300);
    CHECK(hi > 1.0 - 1e-15);
  }
}

TEST_CASE("logit response is symmetric and monotone in delta") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double beta = rng.uniform(0.0, 5.0);
    const double delta = rng.uniform(-20.0, 20.0);
    CHECK(std::abs(logit_prob_x(beta, delta) + logit_prob_x(beta, -delta) - 1.0) < 1e-15);
  }
  double prev = 1.0;
  for (double delta = -30.0; delta <= 30.0; delta += 0.25) {
    const double p = logit_prob_x(1.0, delta);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("fixed point map reference values") {
  CHECK(std::abs(fixed_point_map(kRef, kSharp, 0.0, 0.78) - 0.96442881072736383) < 1e-15);
  // At the threshold tax the midpoint is exactly fixed, for any beta.
  for (const double beta : {0.01, 0.3, 1.0, 10.0}) {
    CHECK(fixed_point_map(kRef, BehavioralParams(beta, 1.5), 0.5, 0.5) == 0.5);
  }
  CHECK_THROWS_AS(fixed_point_map(kRef, kSharp, -1.0, 0.5), DomainError);
  CHECK_THROWS_AS(fixed_point_map(kRef, kSharp, 0.0, 1.2), DomainError);
}

TEST_CASE("map derivative agrees with a centered difference") {
  Rng rng(5);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const CoordinationGame g = random_game(rng);
    const BehavioralParams params(rng.uniform(0.0, 1.0), rng.uniform(0.0, 3.0));
    const double t = rng.uniform(0.0, 2.0);
    const double p = rng.uniform(h, 1.0 - h);
    const double analytic = map_derivative(g, params, t, p);
    const double central = (fixed_point_map(g, params, t, p + h) - fixed_point_map(g, params, t, p - h)) / (2.0 * h);
    CHECK(std::abs(analytic - central) < 1e-6);
    CHECK(analytic >= 0.0);  // the map is increasing in p
  }
}

TEST_CASE("contraction modulus closed form") {
  CHECK(contraction_modulus(kRef, kSharp) == 2.5);
  CHECK(contraction_modulus(kRef, kSoft) == 0.75);
  CHECK(contraction_modulus(kRef, BehavioralParams(0.0, 1.5)) == 0.0);
  // The derivative can never exceed the modulus.
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const double p = rng.uniform();
    CHECK(map_derivative(kRef, kSoft, 0.0, p) <= 0.75 + 1e-15);
  }
}

TEST_CASE("banach solver reproduces independently computed equilibria") {
  const Equilibrium eq = solve_banach(kRef, kSoft, 0.0);
  CHECK(std::abs(eq.p - 0.63596612662985218) < 1e-10);
  CHECK(eq.residual <= 1e-12);
  CHECK(eq.stable);
  CHECK(eq.contraction_modulus == 0.75);
  CHECK(eq.iterations >= 1);
  CHECK(eq.iterations <= kDefaultMaxIter);

  // Tax pushes the population out of the status quo; values precomputed with
  // a high-precision fixed-point iteration.
  CHECK(std::abs(solve_banach(kRef, kSoft, 0.25).p - 0.57290643714060129) < 1e-10);
  CHECK(std::abs(solve_banach(kRef, kSoft, 0.75).p - 0.42709356285939871) < 1e-10);
  CHECK(std::abs(solve_banach(kRef, kSoft, 1.0).p - 0.36403387337014782) < 1e-10);
  CHECK(std::abs(solve_banach(kRef, kSoft, 5.0).p - 0.065835487963204513) < 1e-10);

  // Mirror pair around the threshold tax 0.5.
  const double below = solve_banach(kRef, kSoft, 0.25).p;
  const double above = solve_banach(kRef, kSoft, 0.75).p;
  CHECK(std::abs(below + above - 1.0) < 1e-11);
}

TEST_CASE("banach solver switching-cost response") {
  double prev = -1.0;
  const double expected[] = {0.27224356243012349, 0.42709356285939871, 0.63596612662985218,
                             0.76093201302851283, 0.83106524613513821};
  const double kappas[] = {0.0, 0.75, 1.5, 2.25, 3.0};
  for (int i = 0; i < 5; ++i) {
    const Equilibrium eq = solve_banach(kRef, BehavioralParams(0.3, kappas[i]), 0.0);
    CHECK(std::abs(eq.p - expected[i]) < 1e-10);
    CHECK(eq.p > prev);
    prev = eq.p;
  }
}

TEST_CASE("banach solver degenerate and failure modes") {
  // beta = 0: f is constant 1/2, solved immediately.
  const Equilibrium flat = solve_banach(kRef, BehavioralParams(0.0, 1.5), 0.0);
  CHECK(flat.p == 0.5);
  CHECK(flat.iterations <= 2);

  CHECK_THROWS_AS(solve_banach(kRef, kSharp, 0.0), NotContraction);
  try {
    solve_banach(kRef, kSharp, 0.0);
    FAIL("expected NotContraction");
  } catch (const NotContraction& e) {
    CHECK(e.modulus == 2.5);
  }

  CHECK_THROWS_AS(solve_banach(kRef, kSoft, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(solve_banach(kRef, kSoft, 0.0, -1e-9), DomainError);
  CHECK_THROWS_AS(solve_banach(kRef, kSoft, 0.0, 1e-12, 0), DomainError);
  CHECK_THROWS_AS(solve_banach(kRef, kSoft, -0.5), DomainError);
  CHECK_THROWS_AS(solve_banach(kRef, kSoft, 0.0, 1e-12, 3), NoConvergence);
}

TEST_CASE("banach iterates contract residuals geometrically") {
  const double m = contraction_modulus(kRef, kSoft);
  double p = 0.5;
  double prev_residual = std::abs(fixed_point_map(kRef, kSoft, 0.0, p) - p);
  for (int k = 0; k < 80 && prev_residual > 1e-13; ++k) {
    p = fixed_point_map(kRef, kSoft, 0.0, p);
    const double residual = std::abs(fixed_point_map(kRef, kSoft, 0.0, p) - p);
    CHECK(residual <= m * prev_residual * (1.0 + 1e-9));
    prev_residual = residual;
  }
  CHECK(prev_residual <= 1e-13);
}

TEST_CASE("full enumeration finds all three equilibria of the sharp instance") {
  const auto roots = find_all_fixed_points(kRef, kSharp, 0.0);
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0].p - 0.012422089308455973) < 1e-9);
  CHECK(std::abs(roots[1].p - 0.41613328951025320) < 1e-9);
  CHECK(std::abs(roots[2].p - 0.99575407559594309) < 1e-9);
  CHECK(roots[0].stable);
  CHECK_FALSE(roots[1].stable);
  CHECK(roots[2].stable);
  for (const auto& r : roots) {
    CHECK(r.residual <= 1e-12);
    CHECK(r.contraction_modulus == 2.5);
    CHECK(r.p > 0.0);
    CHECK(r.p < 1.0);
  }
  CHECK(roots[0].p < roots[1].p);
  CHECK(roots[1].p < roots[2].p);
}

TEST_CASE("full enumeration lands exactly on a grid-point root without duplicating it") {
  // At t = 0.5 the midpoint satisfies Delta(1/2) = 0 and 1/2 is a grid point
  // of the default scan, hitting the exact-zero path and its neighbour
  // bracket at once; the dedupe step must fold those into one root.
  const auto roots = find_all_fixed_points(kRef, kSharp, 0.5);
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0].p - 0.0071880641826716225) < 1e-9);
  CHECK(roots[1].p == 0.5);
  CHECK(std::abs(roots[2].p - 0.99281193581732838) < 1e-9);
  CHECK_FALSE(roots[1].stable);  // |f'(1/2)| = 2.5
}

TEST_CASE("full enumeration under a contraction matches the banach solver") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const CoordinationGame g = random_game(rng);
    const double target = rng.uniform(0.05, 0.9);
    const BehavioralParams params(4.0 * target / (g.alpha + g.gamma), rng.uniform(0.0, 3.0));
    const double t = rng.uniform(0.0, 2.0);
    const auto roots = find_all_fixed_points(g, params, t, 2000);
    REQUIRE(roots.size() == 1);
    const Equilibrium eq = solve_banach(g, params, t);
    CHECK(std::abs(roots[0].p - eq.p) < 1e-9);
    CHECK(roots[0].stable);
  }
}

TEST_CASE("full enumeration at the steep-choice limit") {
  const BehavioralParams steep(50.0, 1.5);
  const auto roots = find_all_fixed_points(kRef, steep, 0.0);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].p < 1e-3);
  CHECK(roots[2].p > 1.0 - 1e-3);
  CHECK(roots[0].stable);
  CHECK_FALSE(roots[1].stable);
  CHECK(roots[2].stable);

  // A prohibitive tax leaves a single corner.
  const auto taxed = find_all_fixed_points(kRef, steep, 100.0);
  REQUIRE(taxed.size() == 1);
  CHECK(taxed[0].p < 1e-3);
  CHECK(taxed[0].stable);
}

TEST_CASE("full enumeration argument validation") {
  CHECK_THROWS_AS(find_all_fixed_points(kRef, kSharp, 0.0, 99), DomainError);
  CHECK_THROWS_AS(find_all_fixed_points(kRef, kSharp, 0.0, 10000, 0.0), DomainError);
  CHECK_THROWS_AS(find_all_fixed_points(kRef, kSharp, -2.0), DomainError);
}
