#ifndef LBSHOCK_STREAMING_HPP_
#define LBSHOCK_STREAMING_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbshock/equilibrium.hpp"
#include "lbshock/flow_field.hpp"
#include "lbshock/gas.hpp"

namespace lbshock {

// Raised when a node leaves the admissible set (rho <= 0 or e below the clamp
// band) or when its equilibrium cannot be formed.
class NumericalFailure : public std::runtime_error {
public:
  NumericalFailure(std::size_t step, int i, int j, const std::string& what);

  std::size_t step() const noexcept { return step_; }
  int node_i() const noexcept { return i_; }
  int node_j() const noexcept { return j_; }

private:
  std::size_t step_;
  int i_;
  int j_;
};

struct StepConfig {
  bool deterministic = true;
  std::size_t max_steps = 0;
  bool record_diagnostics = true;
  int threads = 1;
};

struct StepReport {
  std::size_t step_index = 0;
  double total_mass = 0.0;
  Vec2 total_momentum{};
  double total_energy = 0.0;
  double min_density = 0.0;
  double min_internal_energy = 0.0;
  double wall_time = 0.0;  // seconds
  // Packets from interior sources that left interior + ghost band.
  std::uint64_t overflow_packets = 0;
};

struct StepResult {
  FlowField field;
  StepReport report;
};

// One tau = 1 update: every stored node scatters its equilibrium packets and
// each interior node is rebuilt from what lands on it. Ghost bands must be
// populated beforehand (see FlowField::apply_boundaries). Ghost nodes of the
// result are left as in the input.
StepResult step(const FlowField& field, const GasModel& g, const StepConfig& cfg,
                std::size_t step_index = 0);

struct RunResult {
  FlowField field;
  std::vector<StepReport> reports;
};

// apply_boundaries + step, cfg.max_steps times.
RunResult run(FlowField field, const GasModel& g, const StepConfig& cfg);

}  // namespace lbshock

#endif  // LBSHOCK_STREAMING_HPP_
