#include "lbshock/sod.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lbshock/diagnostics.hpp"

namespace lbshock::cases {

namespace {

NodeState to_node(const riemann::PrimitiveState& w, double vy, double gamma) {
  const double e = internal_energy_from_pressure(w.rho, w.p, gamma);
  return {w.rho, {w.u, vy}, e + 0.5 * (w.u * w.u + vy * vy)};
}

}  // namespace

FlowField sod_field(const GasModel& g, const SodSetup& setup) {
  if (g.dim() == 1 && setup.ny != 1) {
    throw std::invalid_argument("sod_field: 1-D lattice has a single row");
  }
  FlowField field(g.dim(), setup.nx, setup.ny,
                  {BoundaryMode::kGhostExtrapolate, BoundaryMode::kPeriodic}, setup.ghost);
  const NodeState left = to_node(setup.left, 0.0, g.gamma());
  const NodeState right = to_node(setup.right, 0.0, g.gamma());
  for (int j = 0; j < setup.ny; ++j) {
    for (int i = 0; i < setup.nx; ++i) {
      field.at(i, j) = (i + 0.5 < setup.x0) ? left : right;
    }
  }
  field.apply_boundaries();
  return field;
}

FlowField periodic_field(const GasModel& g, int nx, int ny, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);

  struct Mode {
    int kx;
    int ky;
    double a_rho, a_u, a_v, a_p;
    double phase;
  };
  std::vector<Mode> modes;
  for (int kx = 1; kx <= 2; ++kx) {
    for (int ky = 0; ky <= (g.dim() == 2 ? 1 : 0); ++ky) {
      modes.push_back({kx, ky, 0.1 * amp(rng), 0.2 * amp(rng), g.dim() == 2 ? 0.2 * amp(rng) : 0.0,
                       0.1 * amp(rng), phase(rng)});
    }
  }

  FlowField field(g.dim(), nx, ny, {BoundaryMode::kPeriodic, BoundaryMode::kPeriodic}, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      double rho = 1.0;
      double u = 0.0;
      double v = 0.0;
      double p = 1.0;
      for (const Mode& m : modes) {
        const double arg = 2.0 * std::numbers::pi * (m.kx * (i + 0.5) / nx + m.ky * (j + 0.5) / ny) + m.phase;
        rho += m.a_rho * std::sin(arg);
        u += m.a_u * std::cos(arg);
        v += m.a_v * std::sin(arg + 1.0);
        p += m.a_p * std::cos(arg + 0.5);
      }
      field.at(i, j) = to_node({rho, u, p}, v, g.gamma());
    }
  }
  return field;
}

BenchResult benchmark_sod(int nx, int ny, std::size_t steps, double gamma, double sigma, int threads,
                          int repetitions, bool allow_sigma_override) {
  repetitions = std::max(repetitions, 1);
  const GasModel g1(1, gamma, sigma, allow_sigma_override);
  const GasModel g2(2, gamma, sigma, true);
  SodSetup s1;
  s1.nx = nx;
  s1.ny = 1;
  s1.x0 = 0.5 * nx;
  SodSetup s2 = s1;
  s2.ny = ny;

  StepConfig cfg;
  cfg.max_steps = steps;
  cfg.threads = threads;
  cfg.record_diagnostics = false;

  auto median_run = [&](const GasModel& g, const SodSetup& setup, double& median_time) {
    std::vector<std::vector<StepReport>> runs;
    std::vector<double> totals;
    for (int r = 0; r < repetitions; ++r) {
      RunResult res = run(sod_field(g, setup), g, cfg);
      totals.push_back(total_wall_time(res.reports));
      runs.push_back(std::move(res.reports));
    }
    std::vector<std::size_t> order(runs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return totals[a] < totals[b]; });
    const std::size_t mid = order[order.size() / 2];
    median_time = totals[mid];
    return runs[mid];
  };

  BenchResult out;
  out.repetitions = repetitions;
  out.reports_1d = median_run(g1, s1, out.median_1d);
  out.reports_2d = median_run(g2, s2, out.median_2d);
  out.ratio = steps == 0 ? 0.0 : timing_comparison(out.reports_1d, out.reports_2d);
  return out;
}

}  // namespace lbshock::cases
