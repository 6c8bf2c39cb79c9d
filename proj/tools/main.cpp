#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qresb/equilibrium.hpp>
#include <qresb/format.hpp>
#include <qresb/game.hpp>
#include <qresb/policy.hpp>
#include <qresb/verification.hpp>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitDominanceViolation = 4;
constexpr int kExitVerificationFailure = 5;

struct SweepSpec {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  long long steps = 0;
};

struct AppConfig {
  double a = 6.0, b = 7.0, c = 1.0, d = 2.0;
  double kappa = 1.5;
  double beta = 1.0;
  std::string policy_type = "tax";
  double t = 0.0;
  qresb::SolverOptions solver;
  std::optional<SweepSpec> sweep;
  std::uint64_t seed = 0;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError("config: " + where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError("config: " + where + " must be finite");
  return v;
}

long long as_count(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ConfigError("config: " + where + " must be an integer");
  return j.get<long long>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) {
      throw ConfigError("config: unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

void load_config_file(const std::string& path, AppConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: " + path + " is not valid JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  reject_unknown_keys(j, {"payoffs", "kappa", "beta", "policy", "solver", "sweep", "seed"}, "top level");

  if (j.contains("payoffs")) {
    const json& p = j["payoffs"];
    if (!p.is_object()) throw ConfigError("config: payoffs must be an object");
    reject_unknown_keys(p, {"a", "b", "c", "d"}, "payoffs");
    if (p.contains("a")) cfg.a = as_number(p["a"], "payoffs.a");
    if (p.contains("b")) cfg.b = as_number(p["b"], "payoffs.b");
    if (p.contains("c")) cfg.c = as_number(p["c"], "payoffs.c");
    if (p.contains("d")) cfg.d = as_number(p["d"], "payoffs.d");
  }
  if (j.contains("kappa")) cfg.kappa = as_number(j["kappa"], "kappa");
  if (j.contains("beta")) cfg.beta = as_number(j["beta"], "beta");
  if (j.contains("policy")) {
    const json& p = j["policy"];
    if (!p.is_object()) throw ConfigError("config: policy must be an object");
    reject_unknown_keys(p, {"type", "t"}, "policy");
    if (p.contains("type")) {
      if (!p["type"].is_string()) throw ConfigError("config: policy.type must be a string");
      cfg.policy_type = p["type"].get<std::string>();
      if (cfg.policy_type != "tax" && cfg.policy_type != "deletion") {
        throw ConfigError("config: policy.type must be \"tax\" or \"deletion\"");
      }
    }
    if (p.contains("t")) {
      if (cfg.policy_type == "deletion") throw ConfigError("config: policy.t is only valid with type \"tax\"");
      cfg.t = as_number(p["t"], "policy.t");
    }
  }
  if (j.contains("solver")) {
    const json& s = j["solver"];
    if (!s.is_object()) throw ConfigError("config: solver must be an object");
    reject_unknown_keys(s, {"tol", "max_iter", "grid_n"}, "solver");
    if (s.contains("tol")) cfg.solver.tol = as_number(s["tol"], "solver.tol");
    if (s.contains("max_iter")) cfg.solver.max_iter = static_cast<int>(as_count(s["max_iter"], "solver.max_iter"));
    if (s.contains("grid_n")) cfg.solver.grid_n = static_cast<int>(as_count(s["grid_n"], "solver.grid_n"));
  }
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    if (!s.is_object()) throw ConfigError("config: sweep must be an object");
    reject_unknown_keys(s, {"parameter", "start", "stop", "steps"}, "sweep");
    SweepSpec spec;
    if (!s.contains("parameter") || !s["parameter"].is_string()) {
      throw ConfigError("config: sweep.parameter must be a string");
    }
    spec.parameter = s["parameter"].get<std::string>();
    if (!s.contains("start") || !s.contains("stop") || !s.contains("steps")) {
      throw ConfigError("config: sweep requires parameter, start, stop, steps");
    }
    spec.start = as_number(s["start"], "sweep.start");
    spec.stop = as_number(s["stop"], "sweep.stop");
    spec.steps = as_count(s["steps"], "sweep.steps");
    cfg.sweep = spec;
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) throw ConfigError("config: seed must be an integer");
    if (j["seed"].is_number_integer() && j["seed"].get<long long>() < 0 && !j["seed"].is_number_unsigned()) {
      throw ConfigError("config: seed must be >= 0");
    }
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
}

// Shared flag state; every subcommand registers the same overrides.
struct Flags {
  std::string config_path;
  std::string out_path;
  bool json_output = false;
  bool figure1 = false;
  std::optional<double> a, b, c, d, kappa, beta, t;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> sweep_param;
  std::optional<double> sweep_start, sweep_stop;
  std::optional<long long> sweep_steps;
  std::vector<double> taxes;
};

void add_common_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON configuration file");
  sub->add_flag("--json", f.json_output, "emit JSON instead of human-readable text");
  sub->add_option("--out", f.out_path, "write output to this file (default: standard output)");
  sub->add_option("--seed", f.seed, "seed for randomized checks and simulations");
  sub->add_option("--a", f.a, "payoff a (stay vs stay)");
  sub->add_option("--b", f.b, "payoff b (leave vs leave)");
  sub->add_option("--c", f.c, "payoff c (stay vs leave)");
  sub->add_option("--d", f.d, "payoff d (leave vs stay)");
  sub->add_option("--kappa", f.kappa, "switching cost");
  sub->add_option("--beta", f.beta, "logit choice precision");
  sub->add_option("--t", f.t, "tax rate on the status-quo action");
}

AppConfig resolve_config(const Flags& f) {
  AppConfig cfg;
  if (!f.config_path.empty()) load_config_file(f.config_path, cfg);
  if (f.a) cfg.a = *f.a;
  if (f.b) cfg.b = *f.b;
  if (f.c) cfg.c = *f.c;
  if (f.d) cfg.d = *f.d;
  if (f.kappa) cfg.kappa = *f.kappa;
  if (f.beta) cfg.beta = *f.beta;
  if (f.t) {
    cfg.policy_type = "tax";
    cfg.t = *f.t;
  }
  if (f.seed) cfg.seed = *f.seed;
  if (f.sweep_param || f.sweep_start || f.sweep_stop || f.sweep_steps) {
    SweepSpec spec = cfg.sweep.value_or(SweepSpec{});
    if (f.sweep_param) spec.parameter = *f.sweep_param;
    if (f.sweep_start) spec.start = *f.sweep_start;
    if (f.sweep_stop) spec.stop = *f.sweep_stop;
    if (f.sweep_steps) spec.steps = *f.sweep_steps;
    cfg.sweep = spec;
  }
  if (f.figure1) cfg.sweep = SweepSpec{"t", 0.0, 4.0, 81};
  return cfg;
}

std::string fmt6(double v) { return qresb::fmt_g(v, 6); }
std::string fmt12(double v) { return qresb::fmt_g(v, 12); }

json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return qresb::round_through_12(v);
}

int write_output(const Flags& f, const std::string& body) {
  if (f.out_path.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(f.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << f.out_path << "\n";
    return kExitInvalidInput;
  }
  out << body;
  return kExitOk;
}

std::string game_header(const qresb::CoordinationGame& g, const AppConfig& cfg) {
  std::ostringstream os;
  os << "game: a=" << fmt6(g.a) << " b=" << fmt6(g.b) << " c=" << fmt6(g.c) << " d=" << fmt6(g.d)
     << " (alpha=" << fmt6(g.alpha) << ", gamma=" << fmt6(g.gamma) << ")\n";
  os << "params: beta=" << fmt6(cfg.beta) << " kappa=" << fmt6(cfg.kappa);
  if (cfg.policy_type == "tax") {
    os << " tax t=" << fmt6(cfg.t);
  } else {
    os << " policy=deletion";
  }
  os << "\n";
  return os.str();
}

json game_json(const qresb::CoordinationGame& g) {
  return json{{"a", jnum(g.a)},         {"b", jnum(g.b)},
              {"c", jnum(g.c)},         {"d", jnum(g.d)},
              {"alpha", jnum(g.alpha)}, {"gamma", jnum(g.gamma)},
              {"welfare_monotone", g.welfare_monotone}};
}

int cmd_solve(const AppConfig& cfg, const Flags& f) {
  const qresb::CoordinationGame g(cfg.a, cfg.b, cfg.c, cfg.d);
  const qresb::BehavioralParams params(cfg.beta, cfg.kappa);

  if (cfg.policy_type == "deletion") {
    const qresb::DeletionOutcome out = qresb::deletion_outcome(g);
    if (f.json_output) {
      const json j{{"game", game_json(g)},
                   {"params", json{{"beta", jnum(cfg.beta)}, {"kappa", jnum(cfg.kappa)}}},
                   {"policy", json{{"type", "deletion"}}},
                   {"outcome", json{{"p", jnum(out.p)}, {"welfare", jnum(out.welfare)}}}};
      return write_output(f, j.dump(2) + "\n");
    }
    std::ostringstream os;
    os << game_header(g, cfg);
    os << "status-quo action removed: p = " << fmt6(out.p) << ", welfare = " << fmt6(out.welfare) << "\n";
    return write_output(f, os.str());
  }

  const qresb::Policy policy = qresb::Policy::tax(cfg.t);
  const double m = qresb::contraction_modulus(g, params);
  const bool contraction = m < 1.0;
  std::vector<qresb::Equilibrium> eqs;
  if (contraction) {
    eqs.push_back(qresb::solve_banach(g, params, policy.t, cfg.solver.tol, cfg.solver.max_iter));
  } else {
    eqs = qresb::find_all_fixed_points(g, params, policy.t, cfg.solver.grid_n, cfg.solver.tol);
  }

  if (f.json_output) {
    json rows = json::array();
    for (const auto& eq : eqs) {
      json row{{"p", jnum(eq.p)},
               {"welfare", jnum(qresb::welfare(g, eq.p))},
               {"residual", jnum(eq.residual)},
               {"iterations", eq.iterations},
               {"stable", eq.stable}};
      if (contraction) {
        row["regime"] = std::string(qresb::to_string(qresb::classify_regime(g, params, policy.t)));
      } else {
        row["regime"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    const json j{{"game", game_json(g)},
                 {"params", json{{"beta", jnum(cfg.beta)}, {"kappa", jnum(cfg.kappa)}}},
                 {"policy", json{{"type", "tax"}, {"t", jnum(cfg.t)}}},
                 {"contraction_modulus", jnum(m)},
                 {"contraction", contraction},
                 {"equilibria", rows}};
    return write_output(f, j.dump(2) + "\n");
  }

  std::ostringstream os;
  os << game_header(g, cfg);
  os << "contraction modulus: " << fmt6(m) << "\n";
  if (!contraction) {
    os << "warning: not a contraction (modulus >= 1); enumerating all fixed points\n";
    os << "equilibria (" << eqs.size() << "):\n";
  } else {
    os << "equilibrium:\n";
  }
  for (const auto& eq : eqs) {
    os << "  p = " << fmt6(eq.p) << "  welfare = " << fmt6(qresb::welfare(g, eq.p)) << "  "
       << (eq.stable ? "stable" : "unstable") << "  residual = " << fmt6(eq.residual);
    if (contraction) {
      os << "  regime = " << qresb::to_string(qresb::classify_regime(g, params, policy.t));
    }
    os << "\n";
  }
  return write_output(f, os.str());
}

int cmd_threshold(const AppConfig& cfg, const Flags& f) {
  const qresb::CoordinationGame g(cfg.a, cfg.b, cfg.c, cfg.d);
  const qresb::BehavioralParams params(cfg.beta, cfg.kappa);
  const double tbar = qresb::threshold_tax(g, params);

  const double betas[] = {0.01, 0.3, 1.0, 10.0};
  std::optional<double> max_dev;
  if (tbar >= 0.0) {
    double worst = 0.0;
    for (const double beta : betas) {
      const qresb::BehavioralParams bp(beta, cfg.kappa);
      worst = std::max(worst, std::abs(qresb::fixed_point_map(g, bp, tbar, 0.5) - 0.5));
    }
    max_dev = worst;
  }

  if (f.json_output) {
    json j{{"threshold_tax", jnum(tbar)}};
    if (max_dev) {
      j["midpoint_identity"] = json{{"betas", json::array({0.01, 0.3, 1.0, 10.0})},
                                    {"max_abs_deviation", jnum(*max_dev)}};
    } else {
      j["midpoint_identity"] = nullptr;
    }
    return write_output(f, j.dump(2) + "\n");
  }

  std::ostringstream os;
  os << "threshold tax: " << fmt6(tbar) << "\n";
  if (max_dev) {
    os << "at t = " << fmt6(tbar) << ", max |f(1/2) - 1/2| over beta in {0.01, 0.3, 1, 10}: "
       << fmt6(*max_dev) << "\n";
  } else {
    os << "threshold is negative: the population already favors leaving at p = 1/2 with no tax\n";
  }
  return write_output(f, os.str());
}

std::vector<double> build_grid(const SweepSpec& spec) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(spec.steps));
  const double span = spec.stop - spec.start;
  for (long long i = 0; i < spec.steps; ++i) {
    if (i == spec.steps - 1) {
      grid.push_back(spec.stop);  // exact endpoint, no rounding drift
    } else {
      grid.push_back(spec.start + span * static_cast<double>(i) / static_cast<double>(spec.steps - 1));
    }
  }
  return grid;
}

int cmd_sweep(const AppConfig& cfg, const Flags& f) {
  if (!cfg.sweep) {
    std::cerr << "error: sweep needs a sweep section in the config, --figure1, or --param/--start/--stop/--steps\n";
    return kExitInvalidInput;
  }
  const SweepSpec& spec = *cfg.sweep;
  if (spec.steps < 2) {
    std::cerr << "error: sweep.steps must be >= 2, got " << spec.steps << "\n";
    return kExitInvalidInput;
  }
  if (!(std::isfinite(spec.start) && std::isfinite(spec.stop))) {
    std::cerr << "error: sweep bounds must be finite\n";
    return kExitInvalidInput;
  }
  qresb::SweepParameter parameter;
  if (spec.parameter == "t") {
    parameter = qresb::SweepParameter::tax;
  } else if (spec.parameter == "kappa") {
    parameter = qresb::SweepParameter::kappa;
  } else if (spec.parameter == "beta") {
    parameter = qresb::SweepParameter::beta;
  } else {
    std::cerr << "error: sweep.parameter must be \"t\", \"kappa\", or \"beta\", got \"" << spec.parameter
              << "\"\n";
    return kExitInvalidInput;
  }

  const qresb::CoordinationGame g(cfg.a, cfg.b, cfg.c, cfg.d);
  const qresb::BehavioralParams params(cfg.beta, cfg.kappa);
  const std::vector<double> grid = build_grid(spec);
  const auto rows = qresb::sweep(g, params, cfg.policy_type == "tax" ? cfg.t : 0.0, parameter, grid,
                                 cfg.solver);

  for (const auto& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "warning: " << qresb::to_string(row.parameter) << "=" << fmt12(row.value) << ": "
                << row.error << "\n";
    }
  }

  if (f.json_output) {
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back(json{{"param", std::string(qresb::to_string(row.parameter))},
                           {"value", jnum(row.value)},
                           {"p", jnum(row.p)},
                           {"welfare", jnum(row.welfare)},
                           {"regime", row.regime ? json(std::string(qresb::to_string(*row.regime))) : json(nullptr)},
                           {"stable", row.stable},
                           {"residual", jnum(row.residual)},
                           {"error", row.error}});
    }
    return write_output(f, json{{"rows", jrows}}.dump(2) + "\n");
  }

  std::ostringstream os;
  os << "param,value,p,welfare,regime,stable,residual\n";
  for (const auto& row : rows) {
    os << qresb::to_string(row.parameter) << "," << fmt12(row.value) << "," << fmt12(row.p) << ","
       << fmt12(row.welfare) << "," << (row.regime ? qresb::to_string(*row.regime) : "unclassified") << ","
       << (row.stable ? "true" : "false") << "," << fmt12(row.residual) << "\n";
  }
  return write_output(f, os.str());
}

int cmd_compare(const AppConfig& cfg, const Flags& f) {
  const qresb::CoordinationGame g(cfg.a, cfg.b, cfg.c, cfg.d);
  const qresb::BehavioralParams params(cfg.beta, cfg.kappa);
  const qresb::ComparisonReport report = qresb::compare_policies(g, params, f.taxes, cfg.solver);

  int exit_code = report.dominance_violated ? kExitDominanceViolation : kExitOk;

  if (f.json_output) {
    json outcomes = json::array();
    for (const auto& o : report.tax_outcomes) {
      outcomes.push_back(json{{"t", jnum(o.t)},
                              {"p", jnum(o.eq.p)},
                              {"welfare", jnum(o.welfare)},
                              {"residual", jnum(o.eq.residual)},
                              {"stable", o.eq.stable},
                              {"regime", o.regime ? json(std::string(qresb::to_string(*o.regime))) : json(nullptr)}});
    }
    json gaps = json::array();
    for (const auto& gap : report.welfare_gaps) {
      gaps.push_back(json{{"t", jnum(gap.t)}, {"gap", jnum(gap.gap)}});
    }
    const json j{{"threshold_tax", jnum(report.threshold)},
                 {"deletion", json{{"p", jnum(report.deletion_p)}, {"welfare", jnum(report.deletion_welfare)}}},
                 {"tax_outcomes", outcomes},
                 {"welfare_gaps", gaps},
                 {"dominance_certified", report.dominance_certified},
                 {"dominance_violated", report.dominance_violated},
                 {"note", report.note}};
    const int write_code = write_output(f, j.dump(2) + "\n");
    return write_code != kExitOk ? write_code : exit_code;
  }

  std::ostringstream os;
  os << game_header(g, cfg);
  os << "threshold tax: " << fmt6(report.threshold) << "\n";
  os << "deletion outcome: p = " << fmt6(report.deletion_p) << ", welfare = " << fmt6(report.deletion_welfare)
     << "\n";
  if (!report.tax_outcomes.empty()) {
    os << "tax outcomes:\n";
    for (const auto& o : report.tax_outcomes) {
      os << "  t = " << fmt6(o.t) << ": p = " << fmt6(o.eq.p) << ", welfare = " << fmt6(o.welfare) << ", "
         << (o.eq.stable ? "stable" : "unstable");
      if (o.regime) os << ", regime = " << qresb::to_string(*o.regime);
      os << "\n";
    }
    os << "welfare gaps (deletion minus tax, worst equilibrium):\n";
    for (const auto& gap : report.welfare_gaps) {
      os << "  t = " << fmt6(gap.t) << ": " << fmt6(gap.gap) << "\n";
    }
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& gap : report.welfare_gaps) min_gap = std::min(min_gap, gap.gap);
  os << "deletion dominance certified: " << (report.dominance_certified ? "yes" : "no");
  if (!report.welfare_gaps.empty()) os << " (minimum welfare gap " << fmt6(min_gap) << ")";
  if (!report.note.empty()) os << "; " << report.note;
  os << "\n";
  const int write_code = write_output(f, os.str());
  return write_code != kExitOk ? write_code : exit_code;
}

int cmd_verify(const AppConfig& cfg, const Flags& f) {
  const qresb::CoordinationGame g(cfg.a, cfg.b, cfg.c, cfg.d);
  const qresb::BehavioralParams params(cfg.beta, cfg.kappa);
  qresb::verify::SuiteConfig suite{g, params, cfg.policy_type == "tax" ? cfg.t : 0.0, cfg.solver, cfg.seed};
  const qresb::verify::VerificationReport report = qresb::verify::run_suite(suite);

  int exit_code = report.all_passed() ? kExitOk : kExitVerificationFailure;
  if (f.json_output) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      const char* status = c.informational ? "info" : c.skipped ? "skip" : c.passed ? "pass" : "fail";
      checks.push_back(json{{"name", c.name},
                            {"status", status},
                            {"passed", c.passed},
                            {"measured", jnum(c.measured)},
                            {"tolerance", jnum(c.tolerance)},
                            {"detail", c.detail}});
    }
    const json j{{"seed", report.seed}, {"checks", checks}, {"all_passed", report.all_passed()}};
    const int write_code = write_output(f, j.dump(2) + "\n");
    return write_code != kExitOk ? write_code : exit_code;
  }
  const int write_code = write_output(f, qresb::verify::render(report));
  return write_code != kExitOk ? write_code : exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium solver for symmetric 2x2 coordination games with logit choice,\n"
               "switching costs, and tax-versus-deletion policy analysis"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* solve = app.add_subcommand("solve", "solve for the equilibrium (or enumerate all of them)");
  add_common_flags(solve, flags);
  CLI::App* threshold = app.add_subcommand("threshold", "report the indifference tax threshold");
  add_common_flags(threshold, flags);
  CLI::App* sweep = app.add_subcommand("sweep", "re-solve across a parameter grid and emit CSV");
  add_common_flags(sweep, flags);
  sweep->add_flag("--figure1", flags.figure1, "preset: tax sweep over [0, 4] with 81 points");
  sweep->add_option("--param", flags.sweep_param, "sweep parameter: t, kappa, or beta");
  sweep->add_option("--start", flags.sweep_start, "sweep start value");
  sweep->add_option("--stop", flags.sweep_stop, "sweep stop value");
  sweep->add_option("--steps", flags.sweep_steps, "number of grid points (>= 2)");
  CLI::App* compare = app.add_subcommand("compare", "compare candidate taxes against deletion");
  add_common_flags(compare, flags);
  compare->add_option("--taxes", flags.taxes, "candidate tax rates")->delimiter(',');
  CLI::App* verify = app.add_subcommand("verify", "run the self-verification suite");
  add_common_flags(verify, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    const AppConfig cfg = resolve_config(flags);
    if (solve->parsed()) return cmd_solve(cfg, flags);
    if (threshold->parsed()) return cmd_threshold(cfg, flags);
    if (sweep->parsed()) return cmd_sweep(cfg, flags);
    if (compare->parsed()) return cmd_compare(cfg, flags);
    if (verify->parsed()) return cmd_verify(cfg, flags);
    std::cerr << "error: no subcommand\n";
    return kExitInvalidInput;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const qresb::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const qresb::NotContraction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const qresb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
