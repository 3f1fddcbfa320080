#ifndef LBSHOCK_SOD_HPP_
#define LBSHOCK_SOD_HPP_

#include <cstdint>
#include <vector>

#include "lbshock/flow_field.hpp"
#include "lbshock/gas.hpp"
#include "lbshock/riemann.hpp"
#include "lbshock/streaming.hpp"

// Experiment setups shared by the CLI, the tests and the benchmarks.
namespace lbshock::cases {

struct SodSetup {
  int nx = 400;
  int ny = 1;  // rows for the 2-D lattice; must be 1 when dim == 1
  double x0 = 200.0;
  riemann::PrimitiveState left = riemann::kSodLeft;
  riemann::PrimitiveState right = riemann::kSodRight;
  int ghost = kDefaultGhostWidth;
};

// Nodes with centre i + 0.5 < x0 take the left state. The 2-D field is
// periodic across rows and ghost-extrapolated along x.
FlowField sod_field(const GasModel& g, const SodSetup& setup);

// Smooth random periodic data: a few low Fourier modes in rho, v and p with
// amplitudes small enough to stay admissible.
FlowField periodic_field(const GasModel& g, int nx, int ny, std::uint64_t seed);

struct BenchResult {
  std::vector<StepReport> reports_1d;  // repetition with the median total time
  std::vector<StepReport> reports_2d;
  double median_1d = 0.0;  // seconds, whole run
  double median_2d = 0.0;
  double ratio = 0.0;
  int repetitions = 0;
};

inline constexpr int kMinBenchRepetitions = 5;

// Runs the 1-D and 2-D Sod cases with identical nx and step counts,
// `repetitions` times each, and compares the median runs.
BenchResult benchmark_sod(int nx, int ny, std::size_t steps, double gamma, double sigma, int threads,
                          int repetitions = kMinBenchRepetitions, bool allow_sigma_override = false);

}  // namespace lbshock::cases

#endif  // LBSHOCK_SOD_HPP_
