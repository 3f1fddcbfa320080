#ifndef LBSHOCK_DIAGNOSTICS_HPP_
#define LBSHOCK_DIAGNOSTICS_HPP_

#include <optional>
#include <span>
#include <stdexcept>

#include "lbshock/flow_field.hpp"
#include "lbshock/gas.hpp"
#include "lbshock/profile.hpp"
#include "lbshock/streaming.hpp"

namespace lbshock {

class GridMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

struct NormReport {
  Norms rho;
  Norms u;
  Norms e;
  Norms p;
  // computed minus exact shock location; empty when either has no shock.
  std::optional<double> shock_position_error;
};

// Per-point averaged norms: L1 = mean |d|, L2 = sqrt(mean d^2), Linf = max |d|.
// Throws GridMismatch unless both tables share the same x values. The contact
// estimate is forwarded to locate_shock for both profiles.
NormReport error_norms(const ProfileTable& computed, const ProfileTable& exact,
                       std::optional<double> contact_estimate = std::nullopt);

// Generic per-column helper behind error_norms.
Norms difference_norms(std::span<const double> a, std::span<const double> b);

inline constexpr double kShockGradientThreshold = 1e-8;

// Midpoint of the steepest density drop/rise between neighbouring nodes.
// Only node pairs whose left node lies at or beyond contact_estimate are
// considered; without an estimate, pairs whose midpoint lies in the right half
// of the domain. Ties go to larger x. Empty if the steepest gradient is below
// kShockGradientThreshold.
std::optional<double> locate_shock(const ProfileTable& profile,
                                   std::optional<double> contact_estimate = std::nullopt);

// Sums of rho, rho v and rho E over interior nodes.
Moments conservation_totals(const FlowField& field);

// Row-averaged longitudinal profile of a field, interior nodes only, with
// node i placed at x = i + 0.5.
ProfileTable field_profile(const FlowField& field, const GasModel& g);

// Largest relative spread of any primitive variable across rows of a 2-D
// field: max over (i, j) of |q(i, j) - q(i, 0)| / max(|q(i, 0)|, 1).
double row_spread(const FlowField& field);

double total_wall_time(std::span<const StepReport> reports) noexcept;

// Ratio of total solver wall time, 2-D over 1-D. Throws std::invalid_argument
// if the step counts differ or the 1-D time is zero.
double timing_comparison(std::span<const StepReport> reports_1d, std::span<const StepReport> reports_2d);

}  // namespace lbshock

#endif  // LBSHOCK_DIAGNOSTICS_HPP_
