#pragma once

#include <vector>

#include <qresb/game.hpp>

namespace qresb {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kDefaultMaxIter = 100000;
inline constexpr int kDefaultGridN = 10000;

/// One fixed point of the logit best-response map.
struct Equilibrium {
  double p;                    // fraction playing the status-quo action
  double residual;             // |f(p) - p| at the reported point
  int iterations;              // map applications (or bisection steps) spent
  bool stable;                 // |f'(p)| < 1, strictly
  double contraction_modulus;  // beta * (alpha + gamma) / 4 for the instance
};

/// P(play X) under logit choice: 1 / (1 + exp(beta * delta)).
/// Overflow-safe for any finite beta * delta; the result is clamped into the
/// open interval (0, 1) and is exactly 1/2 when beta * delta == 0.
double logit_prob_x(double beta, double delta);

/// The equilibrium map f(p) = logit_prob_x(beta, Delta_t(p)).
/// Requires p in [0, 1] and t >= 0; always lands in (0, 1).
double fixed_point_map(const CoordinationGame& g, const BehavioralParams& params, double t, double p);

/// f'(p) = beta * (alpha + gamma) * q * (1 - q) with q = f(p). Nonnegative,
/// so f is increasing in p: more people staying makes staying more attractive.
double map_derivative(const CoordinationGame& g, const BehavioralParams& params, double t, double p);

/// Global Lipschitz bound for f: beta * (alpha + gamma) / 4. Values below 1
/// certify a unique fixed point.
double contraction_modulus(const CoordinationGame& g, const BehavioralParams& params);

/// Iterates f from p0 = 1/2 until the residual meets tol, then cross-checks
/// runs started from 0 and 1 (agreement within 10 * tol).
/// Throws NotContraction when the modulus is >= 1, NoConvergence when the
/// iteration budget runs out or starts disagree, DomainError on bad tol,
/// max_iter, or t.
Equilibrium solve_banach(const CoordinationGame& g, const BehavioralParams& params, double t,
                         double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

/// Enumerates every fixed point in [0, 1] by scanning grid_n + 1 uniform
/// points for sign changes of f(p) - p and bisecting each bracket until the
/// residual meets tol. Roots closer than 10 * tol are merged. Works with any
/// modulus; result is sorted ascending and never empty (f maps [0, 1] into
/// (0, 1), so a fixed point always exists).
/// Requires grid_n >= 100 and tol > 0.
std::vector<Equilibrium> find_all_fixed_points(const CoordinationGame& g, const BehavioralParams& params,
                                               double t, int grid_n = kDefaultGridN, double tol = kDefaultTol);

/// Solver knobs bundled for the policy-level operations and the CLI.
struct SolverOptions {
  double tol = kDefaultTol;
  int max_iter = kDefaultMaxIter;
  int grid_n = kDefaultGridN;
};

}  // namespace qresb
