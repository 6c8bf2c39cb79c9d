#include <qresb/game.hpp>

#include <cmath>
#include <sstream>

namespace qresb {

namespace {

std::string describe_payoffs(double a, double b, double c, double d) {
  std::ostringstream os;
  os << "a=" << a << " b=" << b << " c=" << c << " d=" << d;
  return os.str();
}

void require_unit_interval(double p, const char* where) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << where << ": p must lie in [0, 1], got " << p;
    throw DomainError(os.str());
  }
}

}  // namespace

CoordinationGame::CoordinationGame(double a, double b, double c, double d)
    : a(a), b(b), c(c), d(d), alpha(b - c), gamma(a - d), welfare_monotone(c + d <= a + b) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
    throw InvalidGame(InvalidGame::Violation::non_finite,
                      "invalid game: payoffs must be finite (" + describe_payoffs(a, b, c, d) + ")");
  }
  if (!(a > c)) {
    throw InvalidGame(InvalidGame::Violation::a_not_greater_than_c,
                      "invalid game: requires a > c, got " + describe_payoffs(a, b, c, d));
  }
  if (!(b > d)) {
    throw InvalidGame(InvalidGame::Violation::b_not_greater_than_d,
                      "invalid game: requires b > d, got " + describe_payoffs(a, b, c, d));
  }
  if (!(b > a)) {
    throw InvalidGame(InvalidGame::Violation::b_not_greater_than_a,
                      "invalid game: requires b > a, got " + describe_payoffs(a, b, c, d));
  }
}

BehavioralParams::BehavioralParams(double beta, double kappa) : beta(beta), kappa(kappa) {
  if (!(std::isfinite(beta) && beta >= 0.0)) {
    std::ostringstream os;
    os << "beta must be finite and >= 0, got " << beta;
    throw DomainError(os.str());
  }
  if (!(std::isfinite(kappa) && kappa >= 0.0)) {
    std::ostringstream os;
    os << "kappa must be finite and >= 0, got " << kappa;
    throw DomainError(os.str());
  }
}

Policy Policy::tax(double t) {
  if (!(std::isfinite(t) && t >= 0.0)) {
    std::ostringstream os;
    os << "tax rate must be finite and >= 0, got " << t;
    throw DomainError(os.str());
  }
  return Policy{PolicyKind::tax, t};
}

Policy Policy::deletion() { return Policy{PolicyKind::deletion, 0.0}; }

double expected_payoff_x(const CoordinationGame& g, double p) {
  require_unit_interval(p, "expected_payoff_x");
  return p * g.a + (1.0 - p) * g.c;
}

double expected_payoff_y(const CoordinationGame& g, double p) {
  require_unit_interval(p, "expected_payoff_y");
  return p * g.d + (1.0 - p) * g.b;
}

double payoff_difference(const CoordinationGame& g, const BehavioralParams& params, double t, double p) {
  require_unit_interval(p, "payoff_difference");
  if (!(std::isfinite(t) && t >= 0.0)) {
    std::ostringstream os;
    os << "payoff_difference: tax rate must be finite and >= 0, got " << t;
    throw DomainError(os.str());
  }
  return g.alpha - params.kappa + t - p * (g.alpha + g.gamma);
}

double welfare(const CoordinationGame& g, double p) {
  require_unit_interval(p, "welfare");
  const double q = 1.0 - p;
  return p * p * g.a + p * q * (g.c + g.d) + q * q * g.b;
}

}  // namespace qresb
