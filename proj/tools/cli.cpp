#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lbshock/csv.hpp"
#include "lbshock/diagnostics.hpp"
#include "lbshock/gas.hpp"
#include "lbshock/sod.hpp"
#include "lbshock/streaming.hpp"

namespace lbshock::cli {

int RunConfig::dim() const noexcept {
  switch (run_case) {
    case Case::kSod1d:
      return 1;
    case Case::kSod2d:
      return 2;
    case Case::kPeriodicTest:
      return ny > 1 ? 2 : 1;
  }
  return 1;
}

std::string case_name(Case c) {
  switch (c) {
    case Case::kSod1d:
      return "sod1d";
    case Case::kSod2d:
      return "sod2d";
    case Case::kPeriodicTest:
      return "periodic-test";
  }
  return "unknown";
}

namespace {

struct Options {
  std::string case_str = "sod1d";
  int nx = 400;
  int ny = 0;
  long long steps = 75;
  double gamma = GasModel::kDefaultGamma;
  double sigma = GasModel::kDefaultSigma;
  bool allow_sigma_override = false;
  bool deterministic = true;
  int threads = 1;
  std::string out;
  bool compare_exact = false;
  std::uint64_t seed = 1;
  int repetitions = cases::kMinBenchRepetitions;
  std::vector<double> left;
  std::vector<double> right;
};

struct Flags {
  CLI::Option* ny = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* left = nullptr;
  CLI::Option* right = nullptr;
  CLI::Option* case_opt = nullptr;
};

Flags add_common(CLI::App& sub, Options& o) {
  Flags f;
  f.case_opt = sub.add_option("--case", o.case_str, "Experiment case")
                   ->check(CLI::IsMember({"sod1d", "sod2d", "periodic-test"}));
  sub.add_option("--nx", o.nx, "Interior nodes along x (>= 4)");
  f.ny = sub.add_option("--ny", o.ny, "Rows of the 2-D lattice");
  sub.add_option("--steps", o.steps, "Number of time steps (>= 0)");
  sub.add_option("--gamma", o.gamma, "Ratio of specific heats");
  sub.add_option("--sigma", o.sigma, "Rest-density fraction of the 1-D lattice");
  sub.add_flag("--allow-sigma-override", o.allow_sigma_override, "Accept sigma outside [0.4, 0.55]");
  f.out = sub.add_option("--out", o.out, "Output path");
  sub.add_flag("--compare-exact", o.compare_exact, "Append exact-solution columns and error norms");
  sub.add_option("--deterministic", o.deterministic, "Fixed accumulation order (true/false)");
  sub.add_option("--threads", o.threads, "Solver threads (>= 1)");
  sub.add_option("--seed", o.seed, "Seed for the periodic-test initial data");
  return f;
}

riemann::PrimitiveState to_state(const std::vector<double>& v, const char* name) {
  if (v.size() != 3) {
    throw ConfigError(std::string("--") + name + " expects three values: rho u p");
  }
  if (!(v[0] > 0.0) || !(v[2] > 0.0) || !std::isfinite(v[1])) {
    throw ConfigError(std::string("--") + name + " needs rho > 0, finite u and p > 0");
  }
  return {v[0], v[1], v[2]};
}

Case parse_case(const std::string& s) {
  if (s == "sod2d") {
    return Case::kSod2d;
  }
  if (s == "periodic-test") {
    return Case::kPeriodicTest;
  }
  return Case::kSod1d;
}

std::filesystem::path default_out(const RunConfig& cfg) {
  if (cfg.command == Command::kOracle) {
    return "oracle.csv";
  }
  return case_name(cfg.run_case) + ".csv";
}

std::filesystem::path grid_path(const std::filesystem::path& profile) {
  std::filesystem::path p = profile;
  p.replace_filename(profile.stem().string() + "_grid" + profile.extension().string());
  return p;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw ConfigError("cannot open output file " + path.string());
  }
  return os;
}

void print_kv(std::ostream& out, const std::string& key, double value) {
  out << key << ": " << csv::format_value(value) << '\n';
}

void print_norms(std::ostream& out, const std::string& name, const Norms& n) {
  print_kv(out, name + "_l1", n.l1);
  print_kv(out, name + "_l2", n.l2);
  print_kv(out, name + "_linf", n.linf);
}

void attach_exact(ProfileTable& table, const ProfileTable& exact) {
  table.exact = ProfileTable::Exact{exact.rho, exact.u, exact.e, exact.p};
}

double relative_drift(double initial, double final_value) {
  return std::abs(final_value - initial) / std::max(std::abs(initial), 1e-300);
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Semi-discrete adaptive-velocity lattice Boltzmann shock-tube solver", "lbshock"};
  app.require_subcommand(1);
  Options o;

  CLI::App* run_cmd = app.add_subcommand("run", "Run a solver case and write its profile CSV");
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the 1-D and 2-D Sod runs");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Write the exact Riemann solution CSV");

  const Flags run_flags = add_common(*run_cmd, o);
  const Flags bench_flags = add_common(*bench_cmd, o);
  bench_cmd->add_option("--repetitions", o.repetitions, "Timed repetitions per lattice (>= 1)");
  const Flags oracle_flags = add_common(*oracle_cmd, o);
  Flags oracle_states = oracle_flags;
  oracle_states.left = oracle_cmd->add_option("--left", o.left, "Left state: rho u p")->expected(3);
  oracle_states.right = oracle_cmd->add_option("--right", o.right, "Right state: rho u p")->expected(3);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    os << e.what() << "\n" << app.help();
    throw ConfigError(os.str());
  }

  RunConfig cfg;
  const Flags* flags = &run_flags;
  if (bench_cmd->parsed()) {
    cfg.command = Command::kBench;
    flags = &bench_flags;
  } else if (oracle_cmd->parsed()) {
    cfg.command = Command::kOracle;
    flags = &oracle_states;
  }

  cfg.run_case = parse_case(o.case_str);
  if (cfg.command == Command::kOracle && cfg.run_case != Case::kSod1d && flags->case_opt->count() > 0) {
    throw ConfigError("oracle only supports --case sod1d");
  }

  const bool ny_given = flags->ny->count() > 0;
  switch (cfg.run_case) {
    case Case::kSod1d:
      if (ny_given && o.ny != 1 && cfg.command != Command::kBench) {
        throw ConfigError("--case sod1d uses a single row; --ny must be 1");
      }
      cfg.ny = 1;
      break;
    case Case::kSod2d:
      cfg.ny = ny_given ? o.ny : 4;
      break;
    case Case::kPeriodicTest:
      cfg.ny = ny_given ? o.ny : 1;
      break;
  }
  if (cfg.command == Command::kBench) {
    // The 2-D half of the benchmark uses ny rows.
    cfg.ny = ny_given ? o.ny : 4;
  }
  if (cfg.ny < 1) {
    throw ConfigError("--ny must be >= 1");
  }
  if (o.nx < 4) {
    throw ConfigError("--nx must be >= 4");
  }
  if (o.steps < 0) {
    throw ConfigError("--steps must be >= 0");
  }
  if (o.threads < 1) {
    throw ConfigError("--threads must be >= 1");
  }
  if (o.repetitions < 1) {
    throw ConfigError("--repetitions must be >= 1");
  }

  cfg.nx = o.nx;
  cfg.steps = static_cast<std::size_t>(o.steps);
  cfg.gamma = o.gamma;
  cfg.sigma = o.sigma;
  cfg.allow_sigma_override = o.allow_sigma_override;
  cfg.deterministic = o.deterministic;
  cfg.threads = o.threads;
  cfg.compare_exact = o.compare_exact;
  cfg.seed = o.seed;
  cfg.repetitions = o.repetitions;
  if (flags->out->count() > 0) {
    cfg.out_path = o.out;
  }
  if (flags->left != nullptr && flags->left->count() > 0) {
    cfg.left = to_state(o.left, "left");
  }
  if (flags->right != nullptr && flags->right->count() > 0) {
    cfg.right = to_state(o.right, "right");
  }

  // Gas-model admissibility for every lattice the command will build.
  try {
    if (cfg.command == Command::kBench) {
      static_cast<void>(GasModel(1, cfg.gamma, cfg.sigma, cfg.allow_sigma_override));
      static_cast<void>(GasModel(2, cfg.gamma, cfg.sigma, true));
    } else if (cfg.command == Command::kRun) {
      static_cast<void>(GasModel(cfg.dim(), cfg.gamma, cfg.sigma, cfg.allow_sigma_override));
    } else if (!(cfg.gamma > 1.0)) {
      throw InvalidGasModel("gamma must exceed 1");
    }
  } catch (const InvalidGasModel& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ExitCode run_case(const RunConfig& cfg, std::ostream& out) {
  const GasModel g(cfg.dim(), cfg.gamma, cfg.sigma, cfg.allow_sigma_override);
  const bool sod = cfg.run_case != Case::kPeriodicTest;

  FlowField initial = [&] {
    if (sod) {
      cases::SodSetup setup;
      setup.nx = cfg.nx;
      setup.ny = cfg.ny;
      setup.x0 = cfg.x0();
      return cases::sod_field(g, setup);
    }
    return cases::periodic_field(g, cfg.nx, cfg.ny, cfg.seed);
  }();
  const Moments before = conservation_totals(initial);

  StepConfig step_cfg;
  step_cfg.max_steps = cfg.steps;
  step_cfg.deterministic = cfg.deterministic;
  step_cfg.threads = cfg.threads;
  step_cfg.record_diagnostics = true;

  RunResult result{initial, {}};
  try {
    result = run(std::move(initial), g, step_cfg);
  } catch (const NumericalFailure& e) {
    out << "error: " << e.what() << '\n';
    return ExitCode::kNumericalFailure;
  }

  ProfileTable profile = field_profile(result.field, g);
  std::optional<ProfileTable> exact;
  std::optional<riemann::RiemannSolution> sol;
  if (sod) {
    exact = riemann::sod_profile(cfg.nx, cfg.x0(), static_cast<double>(cfg.steps), riemann::kSodLeft,
                                 riemann::kSodRight, cfg.gamma);
    sol = riemann::solve_star(riemann::kSodLeft, riemann::kSodRight, cfg.gamma);
  }
  if (cfg.compare_exact && exact) {
    attach_exact(profile, *exact);
  }

  const std::filesystem::path path = cfg.out_path.value_or(default_out(cfg));
  {
    std::ofstream os = open_output(path);
    csv::write_profile(os, profile);
  }
  if (cfg.dim() == 2) {
    std::ofstream os = open_output(grid_path(path));
    csv::write_grid(os, result.field, g);
  }

  const Moments after = conservation_totals(result.field);
  std::uint64_t overflow = 0;
  for (const StepReport& r : result.reports) {
    overflow += r.overflow_packets;
  }

  out << "case: " << case_name(cfg.run_case) << '\n';
  out << "lattice: " << cfg.nx << "x" << cfg.ny << '\n';
  out << "steps: " << cfg.steps << '\n';
  out << "profile_csv: " << path.string() << '\n';
  if (cfg.dim() == 2) {
    out << "grid_csv: " << grid_path(path).string() << '\n';
    print_kv(out, "row_spread", row_spread(result.field));
  }
  print_kv(out, "wall_time_s", total_wall_time(result.reports));
  print_kv(out, "total_mass", after.mass);
  print_kv(out, "total_momentum_x", after.momentum.x);
  print_kv(out, "total_energy", after.energy);
  print_kv(out, "mass_drift", relative_drift(before.mass, after.mass));
  print_kv(out, "energy_drift", relative_drift(before.energy, after.energy));
  out << "overflow_packets: " << overflow << '\n';
  if (!result.reports.empty()) {
    print_kv(out, "min_density", result.reports.back().min_density);
    print_kv(out, "min_internal_energy", result.reports.back().min_internal_energy);
  }

  if (sod && cfg.steps > 0) {
    const double t = static_cast<double>(cfg.steps);
    const double contact = cfg.x0() + sol->u_star * t;
    print_kv(out, "exact_shock_x", cfg.x0() + sol->right_speeds.head * t);
    print_kv(out, "exact_contact_x", contact);
    print_kv(out, "exact_fan_head_x", cfg.x0() + sol->left_speeds.head * t);
    print_kv(out, "exact_fan_tail_x", cfg.x0() + sol->left_speeds.tail * t);
    if (const auto xs = locate_shock(profile, contact)) {
      print_kv(out, "shock_x", *xs);
    } else {
      out << "shock_x: not found\n";
    }
    if (cfg.compare_exact) {
      const NormReport norms = error_norms(profile, *exact, contact);
      print_norms(out, "rho", norms.rho);
      print_norms(out, "u", norms.u);
      print_norms(out, "e", norms.e);
      print_norms(out, "p", norms.p);
      if (norms.shock_position_error) {
        print_kv(out, "shock_position_error", *norms.shock_position_error);
      }
    }
  }
  return ExitCode::kSuccess;
}

ExitCode run_bench(const RunConfig& cfg, std::ostream& out) {
  cases::BenchResult b;
  try {
    b = cases::benchmark_sod(cfg.nx, cfg.ny, cfg.steps, cfg.gamma, cfg.sigma, cfg.threads, cfg.repetitions,
                             cfg.allow_sigma_override);
  } catch (const NumericalFailure& e) {
    out << "error: " << e.what() << '\n';
    return ExitCode::kNumericalFailure;
  }
  std::ostringstream report;
  report << "nx: " << cfg.nx << '\n';
  report << "ny_2d: " << cfg.ny << '\n';
  report << "steps: " << cfg.steps << '\n';
  report << "repetitions: " << b.repetitions << '\n';
  const double steps = std::max<double>(static_cast<double>(cfg.steps), 1.0);
  print_kv(report, "wall_time_1d_s", b.median_1d);
  print_kv(report, "wall_time_2d_s", b.median_2d);
  print_kv(report, "per_step_1d_s", b.median_1d / steps);
  print_kv(report, "per_step_2d_s", b.median_2d / steps);
  print_kv(report, "ratio_2d_over_1d", b.ratio);
  out << report.str();
  if (cfg.out_path) {
    std::ofstream os = open_output(*cfg.out_path);
    os << report.str();
  }
  return ExitCode::kSuccess;
}

ExitCode run_oracle(const RunConfig& cfg, std::ostream& out) {
  const double t = static_cast<double>(cfg.steps);
  riemann::RiemannSolution sol;
  try {
    sol = riemann::solve_star(cfg.left, cfg.right, cfg.gamma);
  } catch (const riemann::VacuumGenerated& e) {
    throw ConfigError(e.what());
  }
  const ProfileTable profile = riemann::sod_profile(cfg.nx, cfg.x0(), t, cfg.left, cfg.right, cfg.gamma);
  const std::filesystem::path path = cfg.out_path.value_or(default_out(cfg));
  {
    std::ofstream os = open_output(path);
    csv::write_profile(os, profile);
  }
  out << "profile_csv: " << path.string() << '\n';
  print_kv(out, "p_star", sol.p_star);
  print_kv(out, "u_star", sol.u_star);
  print_kv(out, "rho_star_left", sol.rho_star_left);
  print_kv(out, "rho_star_right", sol.rho_star_right);
  auto wave = [](riemann::WaveType w) { return w == riemann::WaveType::kShock ? "shock" : "rarefaction"; };
  out << "left_wave: " << wave(sol.left_wave) << '\n';
  out << "right_wave: " << wave(sol.right_wave) << '\n';
  print_kv(out, "left_head_speed", sol.left_speeds.head);
  print_kv(out, "left_tail_speed", sol.left_speeds.tail);
  print_kv(out, "right_head_speed", sol.right_speeds.head);
  print_kv(out, "right_tail_speed", sol.right_speeds.tail);
  return ExitCode::kSuccess;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_config(args);
    ExitCode code = ExitCode::kSuccess;
    switch (cfg.command) {
      case Command::kRun:
        code = run_case(cfg, out);
        break;
      case Command::kBench:
        code = run_bench(cfg, out);
        break;
      case Command::kOracle:
        code = run_oracle(cfg, out);
        break;
    }
    return static_cast<int>(code);
  } catch (const HelpRequested& h) {
    out << h.what();
    return static_cast<int>(ExitCode::kSuccess);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kNumericalFailure);
  } catch (const std::runtime_error& e) {
    // Remaining solver-side errors (inadmissible states, no convergence).
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kNumericalFailure);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  }
}

}  // namespace lbshock::cli
