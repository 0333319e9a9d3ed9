#include "cli/commands.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>

#include "CLI11.hpp"
#include "qwalk/asymptotics.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/fit.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

const std::vector<double> kDefaultScanSigmas{8.0, 10.0, 12.0, 16.0, 20.0, 24.0, 32.0};

double periodic_node(std::size_t j, std::size_t n, double lo, double period) {
  return lo + period * static_cast<double>(j) / static_cast<double>(n);
}

// Grid large enough for the transform of s.
std::size_t grid_for(const PositionState& s, std::size_t requested) {
  return std::max(requested, std::bit_ceil(2 * s.width()));
}

std::vector<Cell> density_row(const std::string& route, const ReducedDensity& rd, const EntanglementResult& r) {
  return {route, rd.a, rd.c, rd.b.real(), rd.b.imag(), rd.delta(), r.r1, r.r2, r.entropy};
}

struct SweepStats {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double min_p1 = 0.0, min_p2 = 0.0, max_p1 = 0.0, max_p2 = 0.0;

  void add(double p1, double p2, double s) {
    if (s < min) std::tie(min, min_p1, min_p2) = std::tuple(s, p1, p2);
    if (s > max) std::tie(max, max_p1, max_p2) = std::tuple(s, p1, p2);
  }
};

template <typename Eval>
Table sweep(const RunConfig& cfg, const char* name1, const char* name2, double lo1, double period1, Eval eval) {
  Table table;
  table.columns = {name1, name2, "s_e"};
  SweepStats stats;
  std::vector<double> values;
  values.reserve(cfg.steps1 * cfg.steps2);
  for (std::size_t i = 0; i < cfg.steps1; ++i) {
    const double p1 = periodic_node(i, cfg.steps1, lo1, period1);
    for (std::size_t j = 0; j < cfg.steps2; ++j) {
      const double p2 = periodic_node(j, cfg.steps2, -kPi, 2.0 * kPi);
      const double s = eval(p1, p2);
      table.rows.push_back({p1, p2, s});
      values.push_back(s);
      stats.add(p1, p2, s);
    }
  }
  const std::string n1 = name1;
  const std::string n2 = name2;
  table.summary = {{"min_s_e", stats.min},        {"min_" + n1, stats.min_p1}, {"min_" + n2, stats.min_p2},
                   {"max_s_e", stats.max},        {"max_" + n1, stats.max_p1}, {"max_" + n2, stats.max_p2}};
  const ExtremaCount extrema = count_local_extrema(values, cfg.steps1, cfg.steps2);
  table.summary.emplace_back("local_maxima", static_cast<std::int64_t>(extrema.maxima));
  table.summary.emplace_back("local_minima", static_cast<std::int64_t>(extrema.minima));
  return table;
}

}  // namespace

Table cmd_simulate(const RunConfig& cfg) {
  const InitialCondition ic = initial_condition(cfg);
  PositionState state = build_initial(ic);
  const StepCount t_max(cfg.t_max);

  Table table;
  table.columns = {"t", "s_e", "variance", "a", "c", "b_abs"};
  for (std::int64_t t = 0;; ++t) {
    const ReducedDensity rd = reduced_density_position(state);
    const EntanglementResult r = entropy(rd);
    table.rows.push_back({t, r.entropy, variance(position_distribution(state)), rd.a, rd.c, std::abs(rd.b)});
    if (t == t_max.value()) break;
    state = step(state);
  }
  const PositionState s0 = build_initial(ic);
  const ReducedDensity limit = asymptotic_reduced_density(fourier_transform(s0, grid_for(s0, cfg.grid_n)));
  table.summary.emplace_back("s_e_asymptotic", entropy(limit).entropy);
  return table;
}

Table cmd_asymptotic(const RunConfig& cfg) {
  const PositionState s0 = build_initial(initial_condition(cfg));
  const KSpinorField f0 = fourier_transform(s0, grid_for(s0, cfg.grid_n));

  Table table;
  table.columns = {"route", "a", "c", "b_re", "b_im", "delta", "r1", "r2", "s_e"};
  const ReducedDensity general = asymptotic_reduced_density(f0);
  table.rows.push_back(density_row("quadrature", general, entropy(general)));

  switch (cfg.ic) {
    case IcKind::kLocalized: {
      const ReducedDensity closed = localized_reduced_density(cfg.alpha, cfg.beta);
      table.rows.push_back(density_row("closed_form", closed, localized_entropy(cfg.alpha, cfg.beta)));
      break;
    }
    case IcKind::kH1: {
      const ReducedDensity sym = asymptotic_reduced_density_symmetric(f0);
      table.rows.push_back(density_row("symmetric", sym, entropy(sym)));
      const ReducedDensity closed = h1_reduced_density(cfg.theta, cfg.phi);
      table.rows.push_back(density_row("closed_form", closed, h1_eigenvalues(cfg.theta, cfg.phi)));
      break;
    }
    case IcKind::kGaussian: {
      const ReducedDensity sym = asymptotic_reduced_density_symmetric(f0);
      table.rows.push_back(density_row("symmetric", sym, entropy(sym)));
      break;
    }
  }
  return table;
}

Table cmd_sweep_localized(const RunConfig& cfg) {
  return sweep(cfg, "alpha", "beta", -kPi, 2.0 * kPi,
               [](double a, double b) { return localized_entropy(a, b).entropy; });
}

Table cmd_sweep_h1(const RunConfig& cfg) {
  return sweep(cfg, "theta", "phi", -kPi / 2.0, kPi,
               [](double theta, double phi) { return h1_eigenvalues(theta, phi).entropy; });
}

Table cmd_gaussian_scan(const RunConfig& cfg) {
  const std::vector<double>& sigmas = cfg.sigmas.empty() ? kDefaultScanSigmas : cfg.sigmas;
  Table table;
  table.columns = {"sigma", "s_e", "smaller_eigenvalue"};
  std::vector<double> small;
  for (double sigma : sigmas) {
    const EntanglementResult r = gaussian_asymptotics(sigma, std::max(cfg.grid_n, gaussian_grid_size(sigma)));
    table.rows.push_back({sigma, r.entropy, r.r2});
    small.push_back(r.r2);
  }
  const bool fittable = sigmas.size() >= 2 && std::all_of(small.begin(), small.end(), [](double v) { return v > 0; });
  if (fittable) table.summary.emplace_back("loglog_slope_smaller_eigenvalue", fit_loglog_slope(sigmas, small));
  return table;
}

double Check::error() const {
  const double e = std::abs(computed - target);
  return std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
}

std::vector<Check> verification_catalog(std::size_t grid_n) {
  using namespace constants;
  std::vector<Check> checks;
  const AsymptoticCoefficients closed = closed_form_coefficients();

  try {
    const AsymptoticCoefficients q = quadrature_coefficients(grid_n);
    checks.push_back({"c1", q.c1, closed.c1, 1e-12});
    checks.push_back({"c2", q.c2, closed.c2, 1e-12});
    checks.push_back({"c3", q.c3, closed.c3, 1e-12});
    checks.push_back({"b1", q.b1, closed.b1, 1e-12});
    checks.push_back({"b2", q.b2, closed.b2, 1e-12});
    checks.push_back({"b3", q.b3, closed.b3, 1e-12});
    checks.push_back({"b4", q.b4, closed.b4, 1e-12});
    checks.push_back({"delta0_from_coefficients", q.c1 * (1.0 - q.c1) - q.b1 * q.b1, kDelta0, 1e-12});
  } catch (const ConsistencyError&) {
    checks.push_back({"quadrature_coefficients", std::numeric_limits<double>::quiet_NaN(), 0.0, 1e-12});
  }

  checks.push_back({"relation_c1_eq_b1_plus_half", closed.c1, closed.b1 + 0.5, 1e-15});
  checks.push_back({"relation_c2_minus_c1_eq_minus_2b1", closed.c2 - closed.c1, -2.0 * closed.b1, 1e-15});
  checks.push_back({"relation_c3_eq_b1", closed.c3, closed.b1, 0.0});
  checks.push_back({"relation_b2_eq_minus_b1", closed.b2, -closed.b1, 1e-15});
  checks.push_back({"relation_b3_eq_b1", closed.b3, closed.b1, 0.0});
  checks.push_back({"relation_b4_eq_sqrt2_b1", closed.b4, kSqrt2 * closed.b1, 1e-15});
  checks.push_back({"delta0_two_printings", kDelta0Alt, kDelta0, 0.0});

  const PeriodicGrid grid(grid_n);
  checks.push_back({"q_weight_average", integrate_average(grid, q_weight), 1.0, 1e-12});
  checks.push_back({"inv_one_plus_cos2_average",
                    integrate_average(grid, [](double k) { return 1.0 / (1.0 + std::cos(k) * std::cos(k)); }),
                    1.0 / kSqrt2, 1e-12});
  const auto b_from_weight = [&](auto weight) {
    return std::abs(integrate_average(grid, [&](double k) { return r_weight(k) * weight(k); }));
  };
  checks.push_back({"B0", b_from_weight([](double) { return 0.5; }), kB0, 1e-12});
  checks.push_back({"B_plus", b_from_weight([](double k) { return std::cos(k) * std::cos(k); }), kBPlus, 1e-12});
  checks.push_back({"B_minus", b_from_weight([](double k) { return std::sin(k) * std::sin(k); }), kBMinus, 1e-12});
  checks.push_back({"B0_eq_mean_of_B_plus_B_minus", kB0, 0.5 * (kBMinus + kBPlus), 1e-15});
  checks.push_back({"B_prime", kBPrime, 0.5 * (kBMinus - kBPlus), 1e-15});

  const EntanglementResult plus = h1_eigenvalues(kPi / 4.0, 0.0);
  const EntanglementResult minus = h1_eigenvalues(kPi / 4.0, kPi);
  checks.push_back({"psi_plus_r1", plus.r1, 2.0 - kSqrt2, 1e-12});
  checks.push_back({"psi_plus_r2", plus.r2, kSqrt2 - 1.0, 1e-12});
  checks.push_back({"psi_minus_r1", minus.r1, 2.0 * (kSqrt2 - 1.0), 1e-12});
  checks.push_back({"psi_minus_r2", minus.r2, 3.0 - 2.0 * kSqrt2, 1e-12});
  checks.push_back({"s_plus_closed_form", s_plus(), 0.97866, 1e-5});
  checks.push_back({"s_minus_closed_form", s_minus(), 0.66129, 1e-5});
  checks.push_back({"s_plus_from_eigenvalues", plus.entropy, s_plus(), 1e-12});
  checks.push_back({"s_minus_from_eigenvalues", minus.entropy, s_minus(), 1e-12});

  const auto quadrature_entropy = [&](const InitialCondition& ic) {
    return entropy(asymptotic_reduced_density(fourier_transform(build_initial(ic), grid_n))).entropy;
  };
  checks.push_back({"s_plus_quadrature", quadrature_entropy(H1{kPi / 4.0, 0.0}), s_plus(), 1e-10});
  checks.push_back({"s_minus_quadrature", quadrature_entropy(H1{kPi / 4.0, kPi}), s_minus(), 1e-10});

  checks.push_back({"s0_closed_form", s0(), 0.87243, 1e-5});
  checks.push_back({"s0_from_delta0", entropy_from_delta(kDelta0).entropy, s0(), 1e-12});
  const ReducedDensity zero_l =
      asymptotic_reduced_density(fourier_transform(PositionState::localized(0, {0.0, 1.0}), grid_n));
  checks.push_back({"zero_L_a", zero_l.a, kSqrt2 / 4.0, 1e-12});
  checks.push_back({"zero_L_b_abs", std::abs(zero_l.b), (2.0 - kSqrt2) / 4.0, 1e-12});
  checks.push_back({"zero_L_delta", zero_l.delta(), kDelta0, 1e-12});

  const EntanglementResult lowest = entropy_from_delta(kDeltaMinLocalized);
  checks.push_back({"localized_min_r1", lowest.r1, (3.0 - kSqrt2) / 2.0, 1e-12});
  checks.push_back({"localized_min_entropy", lowest.entropy, 0.736, 1e-3});
  checks.push_back({"localized_full_entanglement", localized_entropy(-kPi / 8.0, 0.0).entropy, 1.0, 1e-12});
  return checks;
}

Table cmd_verify(const RunConfig& cfg, bool& all_passed) {
  Table table;
  table.columns = {"check", "computed", "target", "abs_error", "tolerance", "pass"};
  all_passed = true;
  std::int64_t failures = 0;
  for (const Check& c : verification_catalog(cfg.grid_n)) {
    table.rows.push_back({c.name, c.computed, c.target, c.error(), c.tolerance, c.passed()});
    if (!c.passed()) {
      all_passed = false;
      ++failures;
    }
  }
  table.summary.emplace_back("failures", failures);
  return table;
}

ExtremaCount count_local_extrema(const std::vector<double>& values, std::size_t rows, std::size_t cols) {
  if (values.size() != rows * cols) throw ParameterError("grid shape does not match value count");
  ExtremaCount count;
  const auto at = [&](std::size_t i, std::size_t j) { return values[(i % rows) * cols + (j % cols)]; };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = at(i, j);
      bool is_max = true;
      bool is_min = true;
      for (std::size_t di = rows - 1; di <= rows + 1; ++di) {
        for (std::size_t dj = cols - 1; dj <= cols + 1; ++dj) {
          if (di == rows && dj == cols) continue;
          const double n = at(i + di, j + dj);
          is_max = is_max && v > n;
          is_min = is_min && v < n;
        }
      }
      count.maxima += is_max;
      count.minima += is_min;
    }
  }
  return count;
}

namespace {

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"--ic", "ic", "Initial condition: localized, h1 or gaussian"},
    {"--alpha", "alpha", "Localized coin angle alpha in [-pi, pi]"},
    {"--beta", "beta", "Localized coin phase beta in [-pi, pi]"},
    {"--theta", "theta", "H1 angle theta in [-pi/2, pi/2]"},
    {"--phi", "phi", "H1 phase phi in [-pi, pi]"},
    {"--sigma", "sigma", "Gaussian spread (comma-separated list for gaussian-scan)"},
    {"--tmax", "tmax", "Number of steps (default 200)"},
    {"--grid-n", "grid-n", "k-grid size, even (default 1024 or $QWALK_GRID_N)"},
    {"--steps", "steps", "Sweep points per axis"},
    {"--alpha-steps,--theta-steps", "steps1", "Sweep points on the first axis"},
    {"--beta-steps,--phi-steps", "steps2", "Sweep points on the second axis"},
    {"--out", "out", "Output file (default stdout)"},
    {"--format", "format", "csv or json"},
};

struct ParsedFlags {
  std::vector<std::string> values = std::vector<std::string>(std::size(kFlags));
  std::vector<std::vector<CLI::Option*>> options = std::vector<std::vector<CLI::Option*>>(std::size(kFlags));
  std::string config_path;
  std::vector<CLI::Option*> config_options;

  void attach(CLI::App* sub) {
    for (std::size_t i = 0; i < std::size(kFlags); ++i) {
      options[i].push_back(sub->add_option(kFlags[i].flag, values[i], kFlags[i].help));
    }
    config_options.push_back(sub->add_option("--config", config_path, "key = value settings file"));
  }

  std::map<std::string, std::string> given() const {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < std::size(kFlags); ++i) {
      for (const CLI::Option* opt : options[i]) {
        if (opt->count() > 0) out[kFlags[i].key] = values[i];
      }
    }
    return out;
  }

  bool has_config() const {
    return std::any_of(config_options.begin(), config_options.end(), [](auto* o) { return o->count() > 0; });
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadamard walk on the line: coin-position entanglement"};
  app.require_subcommand(1);
  ParsedFlags flags;
  const std::vector<std::pair<std::string, Command>> commands{
      {"simulate", Command::kSimulate},           {"asymptotic", Command::kAsymptotic},
      {"sweep-localized", Command::kSweepLocalized}, {"sweep-h1", Command::kSweepH1},
      {"gaussian-scan", Command::kGaussianScan}, {"verify", Command::kVerify},
  };
  const std::map<std::string, std::string> descriptions{
      {"simulate", "Evolve in position space; one row per step"},
      {"asymptotic", "Long-time reduced density by every applicable route"},
      {"sweep-localized", "Long-time entropy over localized coins (alpha, beta)"},
      {"sweep-h1", "Long-time entropy over the H1 family (theta, phi)"},
      {"gaussian-scan", "Long-time entropy of Gaussian packets against sigma"},
      {"verify", "Check the analytic-constant catalogue"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd] : commands) {
    subs.push_back(app.add_subcommand(name, descriptions.at(name)));
    flags.attach(subs.back());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig cfg;
  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) cfg.command = commands[i].second;
    }
    if (const char* env = std::getenv("QWALK_GRID_N"); env != nullptr && *env != '\0') {
      apply_settings({{"grid-n", env}}, cfg);
    }
    if (flags.has_config()) {
      std::ifstream in(flags.config_path);
      if (!in) throw ParameterError("cannot read config file " + flags.config_path);
      apply_settings(parse_config(in), cfg);
    }
    apply_settings(flags.given(), cfg);
    validate(cfg);

    Table table;
    bool passed = true;
    switch (cfg.command) {
      case Command::kSimulate:
        table = cmd_simulate(cfg);
        break;
      case Command::kAsymptotic:
        table = cmd_asymptotic(cfg);
        break;
      case Command::kSweepLocalized:
        table = cmd_sweep_localized(cfg);
        break;
      case Command::kSweepH1:
        table = cmd_sweep_h1(cfg);
        break;
      case Command::kGaussianScan:
        table = cmd_gaussian_scan(cfg);
        break;
      case Command::kVerify:
        table = cmd_verify(cfg, passed);
        break;
    }

    if (cfg.out.empty()) {
      write_table(out, table, cfg.format);
    } else {
      std::ofstream file(cfg.out);
      if (!file) throw ParameterError("cannot write " + cfg.out);
      write_table(file, table, cfg.format);
    }
    return passed ? kExitOk : kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qwalk::cli
