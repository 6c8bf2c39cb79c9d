#include <qresb/policy.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace qresb {

namespace {

RegimeLabel label_for(double p, double tie_tol) {
  const double diff = p - 0.5;
  if (std::abs(diff) <= tie_tol) return RegimeLabel::indifferent;
  return diff > 0.0 ? RegimeLabel::status_quo_persists : RegimeLabel::transition;
}

void require_solver_options(const SolverOptions& opts, const char* where) {
  if (!(std::isfinite(opts.tol) && opts.tol > 0.0)) {
    std::ostringstream os;
    os << where << ": tol must be finite and > 0, got " << opts.tol;
    throw DomainError(os.str());
  }
  if (opts.max_iter < 1) {
    std::ostringstream os;
    os << where << ": max_iter must be >= 1, got " << opts.max_iter;
    throw DomainError(os.str());
  }
  if (opts.grid_n < 100) {
    std::ostringstream os;
    os << where << ": grid_n must be >= 100, got " << opts.grid_n;
    throw DomainError(os.str());
  }
}

// Equilibrium set at one parameter point: the contraction path when it
// applies, the exhaustive scan otherwise.
std::vector<Equilibrium> equilibria_at(const CoordinationGame& g, const BehavioralParams& params, double t,
                                       const SolverOptions& opts) {
  if (contraction_modulus(g, params) < 1.0) {
    return {solve_banach(g, params, t, opts.tol, opts.max_iter)};
  }
  return find_all_fixed_points(g, params, t, opts.grid_n, opts.tol);
}

}  // namespace

std::string_view to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::status_quo_persists:
      return "status_quo_persists";
    case RegimeLabel::indifferent:
      return "indifferent";
    case RegimeLabel::transition:
      return "transition";
  }
  return "unknown";
}

std::string_view to_string(SweepParameter param) {
  switch (param) {
    case SweepParameter::tax:
      return "t";
    case SweepParameter::kappa:
      return "kappa";
    case SweepParameter::beta:
      return "beta";
  }
  return "unknown";
}

double threshold_tax(const CoordinationGame& g, const BehavioralParams& params) {
  return params.kappa - (g.alpha - g.gamma) / 2.0;
}

RegimeLabel classify_regime(const CoordinationGame& g, const BehavioralParams& params, double t,
                            double tie_tol) {
  if (!(std::isfinite(tie_tol) && tie_tol > 0.0)) {
    std::ostringstream os;
    os << "classify_regime: tie_tol must be finite and > 0, got " << tie_tol;
    throw DomainError(os.str());
  }
  const double m = contraction_modulus(g, params);
  if (m >= 1.0) {
    std::ostringstream os;
    os << "classify_regime: requires a contraction, modulus is " << m;
    throw NotContraction(m, os.str());
  }
  const Equilibrium eq = solve_banach(g, params, t);
  const RegimeLabel label = label_for(eq.p, tie_tol);

  // The label must agree with which side of the threshold tax we are on.
  const double tbar = threshold_tax(g, params);
  if ((label == RegimeLabel::status_quo_persists && !(t < tbar)) ||
      (label == RegimeLabel::transition && !(t > tbar))) {
    std::ostringstream os;
    os << "classify_regime: label " << to_string(label) << " at p=" << eq.p
       << " contradicts threshold " << tbar << " vs t=" << t;
    throw Error(os.str());
  }
  return label;
}

DeletionOutcome deletion_outcome(const CoordinationGame& g) { return DeletionOutcome{0.0, welfare(g, 0.0)}; }

std::vector<WelfareGapEntry> welfare_gap(const CoordinationGame& g, const BehavioralParams& params, double t,
                                         const SolverOptions& opts) {
  require_solver_options(opts, "welfare_gap");
  const double w_deleted = deletion_outcome(g).welfare;
  std::vector<WelfareGapEntry> out;
  for (const Equilibrium& eq : equilibria_at(g, params, t, opts)) {
    out.push_back(WelfareGapEntry{eq.p, w_deleted - welfare(g, eq.p), eq.stable});
  }
  return out;
}

std::vector<SweepRow> sweep(const CoordinationGame& g, const BehavioralParams& params, double fixed_t,
                            SweepParameter parameter, std::span<const double> grid,
                            const SolverOptions& opts) {
  if (grid.empty()) throw DomainError("sweep: grid must be non-empty");
  require_solver_options(opts, "sweep");
  if (parameter != SweepParameter::tax && !(std::isfinite(fixed_t) && fixed_t >= 0.0)) {
    std::ostringstream os;
    os << "sweep: tax rate must be finite and >= 0, got " << fixed_t;
    throw DomainError(os.str());
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<SweepRow> rows;
  for (const double value : grid) {
    try {
      BehavioralParams local = params;
      double t = fixed_t;
      switch (parameter) {
        case SweepParameter::tax:
          t = value;
          if (!(std::isfinite(t) && t >= 0.0)) {
            std::ostringstream os;
            os << "tax rate must be finite and >= 0, got " << t;
            throw DomainError(os.str());
          }
          break;
        case SweepParameter::kappa:
          local = BehavioralParams(params.beta, value);
          break;
        case SweepParameter::beta:
          local = BehavioralParams(value, params.kappa);
          break;
      }
      const bool contraction = contraction_modulus(g, local) < 1.0;
      for (const Equilibrium& eq : equilibria_at(g, local, t, opts)) {
        std::optional<RegimeLabel> regime;
        if (contraction) regime = label_for(eq.p, kDefaultTieTol);
        rows.push_back(SweepRow{parameter, value, eq.p, welfare(g, eq.p), regime, eq.stable, eq.residual,
                                std::string{}});
      }
    } catch (const Error& e) {
      // Record the failure on its row and keep sweeping.
      rows.push_back(SweepRow{parameter, value, nan, nan, std::nullopt, false, nan, e.what()});
    }
  }
  return rows;
}

ComparisonReport compare_policies(const CoordinationGame& g, const BehavioralParams& params,
                                  std::span<const double> taxes, const SolverOptions& opts) {
  require_solver_options(opts, "compare_policies");
  for (const double t : taxes) {
    if (!(std::isfinite(t) && t >= 0.0)) {
      std::ostringstream os;
      os << "compare_policies: tax rates must be finite and >= 0, got " << t;
      throw DomainError(os.str());
    }
  }

  ComparisonReport report;
  report.threshold = threshold_tax(g, params);
  const DeletionOutcome del = deletion_outcome(g);
  report.deletion_p = del.p;
  report.deletion_welfare = del.welfare;

  bool any_nonpositive_gap = false;
  for (const double t : taxes) {
    const bool contraction = contraction_modulus(g, params) < 1.0;
    double worst_gap = std::numeric_limits<double>::infinity();
    for (const Equilibrium& eq : equilibria_at(g, params, t, opts)) {
      const double w = welfare(g, eq.p);
      std::optional<RegimeLabel> regime;
      if (contraction) regime = label_for(eq.p, kDefaultTieTol);
      report.tax_outcomes.push_back(TaxOutcome{t, eq, w, regime});
      worst_gap = std::min(worst_gap, del.welfare - w);
    }
    report.welfare_gaps.push_back(WelfareGapAtTax{t, worst_gap});
    if (!(worst_gap > 0.0)) any_nonpositive_gap = true;
  }

  if (!g.welfare_monotone) {
    report.dominance_certified = false;
    report.dominance_violated = false;
    report.note = "dominance not certified (requires c + d <= a + b)";
  } else {
    report.dominance_certified = !any_nonpositive_gap;
    report.dominance_violated = any_nonpositive_gap;
    if (any_nonpositive_gap) {
      report.note = "a welfare gap came out non-positive, contradicting the dominance argument";
    }
  }
  return report;
}

}  // namespace qresb
