#include <qresb/equilibrium.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace qresb {

namespace {

void require_tax(double t, const char* where) {
  if (!(std::isfinite(t) && t >= 0.0)) {
    std::ostringstream os;
    os << where << ": tax rate must be finite and >= 0, got " << t;
    throw DomainError(os.str());
  }
}

// Smallest step that keeps a probability strictly inside (0, 1) after the
// exp-based branches round to an endpoint.
double clamp_open_unit(double p) {
  if (p <= 0.0) return std::numeric_limits<double>::denorm_min();
  if (p >= 1.0) return std::nextafter(1.0, 0.0);
  return p;
}

}  // namespace

double logit_prob_x(double beta, double delta) {
  if (!(beta >= 0.0)) {
    std::ostringstream os;
    os << "logit_prob_x: beta must be >= 0, got " << beta;
    throw DomainError(os.str());
  }
  const double x = beta * delta;
  if (std::isnan(x)) throw DomainError("logit_prob_x: beta * delta is NaN");
  if (x == 0.0) return 0.5;
  double p;
  if (x > 0.0) {
    const double e = std::exp(-x);  // e <= 1, no overflow for any x
    p = e / (1.0 + e);
  } else {
    p = 1.0 / (1.0 + std::exp(x));
  }
  return clamp_open_unit(p);
}

double fixed_point_map(const CoordinationGame& g, const BehavioralParams& params, double t, double p) {
  return logit_prob_x(params.beta, payoff_difference(g, params, t, p));
}

double map_derivative(const CoordinationGame& g, const BehavioralParams& params, double t, double p) {
  const double q = fixed_point_map(g, params, t, p);
  return params.beta * (g.alpha + g.gamma) * q * (1.0 - q);
}

double contraction_modulus(const CoordinationGame& g, const BehavioralParams& params) {
  return params.beta * (g.alpha + g.gamma) / 4.0;
}

Equilibrium solve_banach(const CoordinationGame& g, const BehavioralParams& params, double t, double tol,
                         int max_iter) {
  if (!(std::isfinite(tol) && tol > 0.0)) {
    std::ostringstream os;
    os << "solve_banach: tol must be finite and > 0, got " << tol;
    throw DomainError(os.str());
  }
  if (max_iter < 1) {
    std::ostringstream os;
    os << "solve_banach: max_iter must be >= 1, got " << max_iter;
    throw DomainError(os.str());
  }
  require_tax(t, "solve_banach");

  const double m = contraction_modulus(g, params);
  if (m >= 1.0) {
    std::ostringstream os;
    os << "solve_banach: map is not a contraction (modulus " << m
       << " >= 1); use find_all_fixed_points instead";
    throw NotContraction(m, os.str());
  }

  // Stop once successive iterates are within tol * (1 - m). The fixed point
  // then lies within m * tol of the final iterate, so runs from different
  // starts land within 2 * tol of each other and the reported residual is
  // guaranteed under tol. (Plain tol stopping would let starts drift up to
  // 2 * tol / (1 - m) apart, tripping the agreement check for m near 1.)
  const double stop = tol * (1.0 - m);
  auto iterate = [&](double p0, int* iterations) {
    double p = p0;
    for (int k = 1; k <= max_iter; ++k) {
      const double next = fixed_point_map(g, params, t, p);
      if (std::abs(next - p) <= stop) {
        if (iterations) *iterations = k;
        return next;
      }
      p = next;
    }
    std::ostringstream os;
    os << "solve_banach: no convergence within " << max_iter << " iterations (modulus " << m << ")";
    throw NoConvergence(max_iter, os.str());
  };

  int iterations = 0;
  const double p_mid = iterate(0.5, &iterations);
  const double p_lo = iterate(0.0, nullptr);
  const double p_hi = iterate(1.0, nullptr);
  if (std::abs(p_lo - p_mid) > 10.0 * tol || std::abs(p_hi - p_mid) > 10.0 * tol) {
    std::ostringstream os;
    os << "solve_banach: runs from different starts disagree (" << p_lo << ", " << p_mid << ", " << p_hi
       << ")";
    throw NoConvergence(iterations, os.str());
  }

  const double residual = std::abs(fixed_point_map(g, params, t, p_mid) - p_mid);
  const bool stable = std::abs(map_derivative(g, params, t, p_mid)) < 1.0;
  return Equilibrium{p_mid, residual, iterations, stable, m};
}

namespace {

struct BracketRoot {
  double p;
  double residual;
  int iterations;
};

// Bisects a sign-change bracket until the interval is narrower than tol AND
// the midpoint residual meets tol; keeps halving (down to 1-ulp brackets) for
// steep crossings where a tol-wide interval still carries a large residual.
template <typename Fn>
BracketRoot bisect(Fn&& f, double lo, double g_lo, double hi, double g_hi, double tol) {
  int iterations = 0;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      // Bracket exhausted at ulp resolution: report the better endpoint.
      const double r_lo = std::abs(g_lo);
      const double r_hi = std::abs(g_hi);
      return r_lo <= r_hi ? BracketRoot{lo, r_lo, iterations} : BracketRoot{hi, r_hi, iterations};
    }
    const double g_mid = f(mid);
    ++iterations;
    const double r_mid = std::abs(g_mid);
    if (g_mid == 0.0 || (hi - lo <= tol && r_mid <= tol)) return BracketRoot{mid, r_mid, iterations};
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }
}

}  // namespace

std::vector<Equilibrium> find_all_fixed_points(const CoordinationGame& g, const BehavioralParams& params,
                                               double t, int grid_n, double tol) {
  if (grid_n < 100) {
    std::ostringstream os;
    os << "find_all_fixed_points: grid_n must be >= 100, got " << grid_n;
    throw DomainError(os.str());
  }
  if (!(std::isfinite(tol) && tol > 0.0)) {
    std::ostringstream os;
    os << "find_all_fixed_points: tol must be finite and > 0, got " << tol;
    throw DomainError(os.str());
  }
  require_tax(t, "find_all_fixed_points");

  auto gap = [&](double p) { return fixed_point_map(g, params, t, p) - p; };

  // f maps [0, 1] into (0, 1), so gap(0) > 0 > gap(1): at least one sign
  // change is guaranteed and every root lies strictly inside (0, 1).
  std::vector<BracketRoot> roots;
  double prev_p = 0.0;
  double prev_g = gap(0.0);
  for (int i = 1; i <= grid_n; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(grid_n);
    const double g_i = gap(p);
    if (g_i == 0.0) {
      roots.push_back(BracketRoot{p, 0.0, 0});
    } else if (prev_g != 0.0 && (g_i > 0.0) != (prev_g > 0.0)) {
      roots.push_back(bisect(gap, prev_p, prev_g, p, g_i, tol));
    }
    prev_p = p;
    prev_g = g_i;
  }

  // An exact grid zero also shows up as a sign change in the neighbouring
  // cell; merge anything closer than 10 * tol, keeping the better residual.
  std::vector<BracketRoot> merged;
  for (const auto& r : roots) {
    if (!merged.empty() && r.p - merged.back().p < 10.0 * tol) {
      if (r.residual < merged.back().residual) merged.back() = r;
    } else {
      merged.push_back(r);
    }
  }

  const double m = contraction_modulus(g, params);
  std::vector<Equilibrium> out;
  out.reserve(merged.size());
  for (const auto& r : merged) {
    const bool stable = std::abs(map_derivative(g, params, t, r.p)) < 1.0;
    out.push_back(Equilibrium{r.p, r.residual, r.iterations, stable, m});
  }
  return out;
}

}  // namespace qresb
