#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <qresb/equilibrium.hpp>
#include <qresb/game.hpp>

namespace qresb::verify {

/// Outcome of one named consistency check.
struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;        // precondition (e.g. contraction) absent; not a failure
  bool informational = false;  // measurement-only entries that never gate the suite
  double measured = 0.0;       // headline measured quantity
  double tolerance = 0.0;      // threshold applied, 0 when not applicable
  std::string detail;          // human-readable evidence
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by name

  /// True when every non-informational, non-skipped check passed.
  bool all_passed() const;
};

/// Independent root finder used to cross-examine the solver. Computes the
/// logit response through tanh instead of exp and assembles the payoff gap
/// from raw payoffs, so it shares no arithmetic path with fixed_point_map.
/// Scans grid_n + 1 points and bisects each sign change to width <= 1e-12.
/// Requires grid_n >= 1000.
std::vector<double> oracle_fixed_points(const CoordinationGame& g, const BehavioralParams& params, double t,
                                        int grid_n);

/// Verifies that the equilibrium share of status-quo players rises strictly
/// with the switching cost: solves at each kappa in the grid (fixed beta, t)
/// and checks strict monotonicity plus positive centered-difference slopes.
/// Duplicate grid values throw DomainError (strict monotonicity would be
/// ill-posed). Marked skipped if any grid point leaves the contraction regime.
CheckResult check_comparative_statics(const CoordinationGame& g, double beta, double t,
                                      std::span<const double> kappa_grid);

/// Probes the two beta limits: near 0 the equilibrium must sit within 1e-6 of
/// 1/2, and at beta = 50 every stable fixed point must lie within 1e-3 of a
/// best-response-consistent endpoint (0 where staying wins, 1 where leaving
/// wins). Uses params for kappa; its beta is ignored.
CheckResult check_limits(const CoordinationGame& g, const BehavioralParams& params, double t);

/// Simulates n independent stay/leave draws at the equilibrium mixing
/// probability f(p_star) and checks the empirical stay frequency against
/// p_star within 4 * sqrt(p_star (1 - p_star) / n). Same seed, same result,
/// bit for bit. Requires n >= 10000 (the band is meaningless below that).
CheckResult monte_carlo_consistency(const CoordinationGame& g, const BehavioralParams& params, double t,
                                    double p_star, long long n, std::uint64_t seed);

/// Recomputes the quantities quoted for the bundled reference scenario
/// (payoffs 6/7/1/2, kappa 1.5, beta 1, no tax) and reports which of them are
/// consistent with the model. All entries are informational: they document
/// the scenario, they do not gate the suite.
VerificationReport audit_reference_example();

struct SuiteConfig {
  CoordinationGame game;
  BehavioralParams params;
  double t = 0.0;
  SolverOptions solver = {};
  std::uint64_t seed = 0;
};

/// Runs the full battery (comparative statics, limits, solver-vs-oracle on
/// random contraction instances, derivative spot checks, threshold identity,
/// welfare algebra, Monte Carlo reproducibility, reference-scenario audit)
/// and returns the checks sorted by name.
VerificationReport run_suite(const SuiteConfig& cfg);

/// Deterministic plain-text rendering: one [PASS]/[FAIL]/[SKIP]/[INFO] line
/// per check plus a summary line.
std::string render(const VerificationReport& report);

}  // namespace qresb::verify
