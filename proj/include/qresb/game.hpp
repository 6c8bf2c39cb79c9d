#pragma once

#include <qresb/errors.hpp>

namespace qresb {

/// Symmetric 2x2 coordination game between a status-quo action X and an
/// alternative Y. Row player's payoffs:
///
///            opponent X   opponent Y
///   play X       a            c
///   play Y       d            b
///
/// Validity requires both actions to be strict best responses to themselves
/// (a > c, b > d) and the alternative to be the better equilibrium (b > a).
struct CoordinationGame {
  double a;
  double b;
  double c;
  double d;

  double alpha;  // b - c: gain from joining the alternative when the opponent has
  double gamma;  // a - d: loss from leaving the status quo when the opponent stays

  // c + d <= a + b. Forced by a > c and b > d, so this is always true for a
  // constructed game; kept as data because downstream certification reads it.
  bool welfare_monotone;

  /// Validates the ordering and precomputes alpha, gamma. Throws InvalidGame
  /// naming the first violated inequality.
  CoordinationGame(double a, double b, double c, double d);
};

/// Logit choice precision beta >= 0 and switching cost kappa >= 0.
struct BehavioralParams {
  double beta;
  double kappa;

  /// Throws DomainError on negative or non-finite values.
  BehavioralParams(double beta, double kappa);
};

enum class PolicyKind { tax, deletion };

/// A policy instrument: either a tax t >= 0 on the status-quo action or
/// outright deletion of it.
struct Policy {
  PolicyKind kind;
  double t;  // tax rate; 0 when kind == deletion

  static Policy tax(double t);
  static Policy deletion();
};

/// Expected payoff of playing X against a population where a fraction p plays X.
double expected_payoff_x(const CoordinationGame& g, double p);

/// Expected payoff of playing Y against the same population.
double expected_payoff_y(const CoordinationGame& g, double p);

/// Net inducement to abandon X under tax t and switching cost kappa:
///   Delta_t(p) = alpha - kappa + t - p * (alpha + gamma)
/// (positive means switching to the alternative is attractive, so the logit
/// map sends large Delta to a small probability of staying).
/// Requires p in [0, 1] and t >= 0.
double payoff_difference(const CoordinationGame& g, const BehavioralParams& params, double t, double p);

/// Average realized payoff when a fraction p plays X:
///   W(p) = p^2 a + p(1-p)(c + d) + (1-p)^2 b.
/// Requires p in [0, 1].
double welfare(const CoordinationGame& g, double p);

}  // namespace qresb
