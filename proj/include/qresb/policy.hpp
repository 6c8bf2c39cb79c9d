#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <qresb/equilibrium.hpp>
#include <qresb/game.hpp>

namespace qresb {

inline constexpr double kDefaultTieTol = 1e-9;

/// Which side of the adoption threshold an equilibrium falls on.
enum class RegimeLabel { status_quo_persists, indifferent, transition };

std::string_view to_string(RegimeLabel label);

/// The tax level at which the population is exactly indifferent at p = 1/2:
///   tbar = kappa - (alpha - gamma) / 2.
/// Independent of beta; may be negative when the alternative is already
/// attractive enough without intervention.
double threshold_tax(const CoordinationGame& g, const BehavioralParams& params);

/// Classifies the unique equilibrium at tax t relative to p = 1/2:
/// status_quo_persists when p > 1/2 + tie_tol, transition when p < 1/2 - tie_tol,
/// indifferent inside the band. The label is cross-checked against the sign of
/// threshold_tax(g, params) - t; a mismatch throws (internal inconsistency).
/// Requires a contraction (throws NotContraction otherwise) and tie_tol > 0.
RegimeLabel classify_regime(const CoordinationGame& g, const BehavioralParams& params, double t,
                            double tie_tol = kDefaultTieTol);

/// Outcome when the status-quo action is removed outright: everyone plays the
/// alternative, so p = 0 and welfare = b. No solver involved.
struct DeletionOutcome {
  double p;
  double welfare;
};

DeletionOutcome deletion_outcome(const CoordinationGame& g);

/// welfare(deletion) - welfare(equilibrium at tax t), one entry per fixed
/// point. Under a contraction this is a single entry; otherwise every fixed
/// point is reported so callers can take the worst case.
struct WelfareGapEntry {
  double p;        // equilibrium the gap is measured against
  double gap;      // b - W(p)
  bool stable;
};

std::vector<WelfareGapEntry> welfare_gap(const CoordinationGame& g, const BehavioralParams& params, double t,
                                         const SolverOptions& opts = {});

/// Parameter axis for sweep().
enum class SweepParameter { tax, kappa, beta };

std::string_view to_string(SweepParameter param);

/// One sweep output row. Outside the contraction regime a single grid value
/// yields several rows (one per fixed point) and regime is left empty; a grid
/// value whose solve fails yields one row with NaN numerics and the error
/// message recorded.
struct SweepRow {
  SweepParameter parameter;
  double value;
  double p;
  double welfare;
  std::optional<RegimeLabel> regime;
  bool stable;
  double residual;
  std::string error;  // empty on success
};

/// Re-solves the model across a grid over one parameter, holding the others
/// fixed at the supplied values. Rows keep grid order; within one grid value,
/// fixed points are ascending in p. Requires a non-empty grid.
std::vector<SweepRow> sweep(const CoordinationGame& g, const BehavioralParams& params, double fixed_t,
                            SweepParameter parameter, std::span<const double> grid,
                            const SolverOptions& opts = {});

/// compare_policies output: every candidate tax's equilibrium set next to the
/// deletion outcome, with welfare gaps and a dominance verdict.
struct TaxOutcome {
  double t;
  Equilibrium eq;
  double welfare;
  std::optional<RegimeLabel> regime;  // empty outside the contraction regime
};

struct WelfareGapAtTax {
  double t;
  double gap;  // worst case (minimum) over the fixed points at t
};

struct ComparisonReport {
  double threshold;                     // threshold_tax for the instance
  std::vector<TaxOutcome> tax_outcomes; // ordered by input tax, then by p
  double deletion_p;
  double deletion_welfare;
  std::vector<WelfareGapAtTax> welfare_gaps;  // one per input tax
  bool dominance_certified;   // welfare_monotone held and every gap was > 0
  bool dominance_violated;    // a gap came out <= 0 despite welfare_monotone
  std::string note;           // set when certification is unavailable
};

/// Evaluates each candidate tax (duplicates allowed, order preserved) against
/// deletion. Taxes must be finite and >= 0.
ComparisonReport compare_policies(const CoordinationGame& g, const BehavioralParams& params,
                                  std::span<const double> taxes, const SolverOptions& opts = {});

}  // namespace qresb
