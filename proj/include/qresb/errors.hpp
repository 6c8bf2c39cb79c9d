#pragma once

#include <stdexcept>
#include <string>

namespace qresb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Payoffs violate the coordination-game ordering (a > c, b > d, b > a).
class InvalidGame : public Error {
 public:
  enum class Violation { a_not_greater_than_c, b_not_greater_than_d, b_not_greater_than_a, non_finite };

  InvalidGame(Violation v, const std::string& what) : Error(what), violation(v) {}

  Violation violation;
};

/// An argument is outside its documented domain (negative rate, bad tolerance, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// The best-response map is not a contraction, so the unique-equilibrium
/// machinery refuses to run. Carries the measured modulus.
class NotContraction : public Error {
 public:
  NotContraction(double modulus, const std::string& what) : Error(what), modulus(modulus) {}

  double modulus;
};

/// Iteration hit its budget (or multi-start runs disagreed) without meeting
/// the residual tolerance.
class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, const std::string& what) : Error(what), iterations(iterations) {}

  int iterations;
};

}  // namespace qresb
