#ifndef LBSHOCK_RIEMANN_HPP_
#define LBSHOCK_RIEMANN_HPP_

#include <stdexcept>

#include "lbshock/profile.hpp"

// Exact solution of the 1-D ideal-gas Riemann problem. Shares nothing with
// the lattice solver beyond the profile container, so it can serve as an
// independent reference.
namespace lbshock::riemann {

class VacuumGenerated : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PrimitiveState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

enum class WaveType { kShock, kRarefaction };

// For a shock, head == tail == shock speed.
struct WaveSpeeds {
  double head = 0.0;
  double tail = 0.0;
};

struct RiemannSolution {
  PrimitiveState left;
  PrimitiveState right;
  double gamma = 1.4;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveType left_wave = WaveType::kRarefaction;
  WaveType right_wave = WaveType::kRarefaction;
  WaveSpeeds left_speeds;
  WaveSpeeds right_speeds;
  int iterations = 0;
};

inline constexpr double kNewtonTolerance = 1e-12;
inline constexpr int kMaxNewtonIterations = 100;

// Standard Sod shock-tube states at rest.
inline constexpr PrimitiveState kSodLeft{1.0, 0.0, 1.0};
inline constexpr PrimitiveState kSodRight{0.125, 0.0, 0.1};

// Newton iteration on f_L(p) + f_R(p) + (u_R - u_L) = 0 from the
// two-rarefaction guess, with bisection safeguarding.
RiemannSolution solve_star(const PrimitiveState& left, const PrimitiveState& right, double gamma);

// Exact state at similarity coordinate xi = x / t.
PrimitiveState sample(const RiemannSolution& sol, double xi);

// f_L(p) + f_R(p) + (u_R - u_L) evaluated at p.
double pressure_function(const RiemannSolution& sol, double p);

// Largest absolute mass/momentum/energy flux jump across any shock of the
// solution, measured in the shock frame. Zero if neither wave is a shock.
double rankine_hugoniot_residual(const RiemannSolution& sol);

// Nodes at x = 0.5, 1.5, ..., nx - 0.5 sampled at xi = (x - x0) / t. At t == 0
// returns the initial step with the left state for x < x0.
ProfileTable sod_profile(int nx, double x0, double t, const PrimitiveState& left,
                         const PrimitiveState& right, double gamma);

}  // namespace lbshock::riemann

#endif  // LBSHOCK_RIEMANN_HPP_
