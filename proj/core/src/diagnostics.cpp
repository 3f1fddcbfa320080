#include "lbshock/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lbshock {

void ProfileTable::validate() const {
  const std::size_t n = x.size();
  if (rho.size() != n || u.size() != n || e.size() != n || p.size() != n) {
    throw std::invalid_argument("ProfileTable: column lengths differ");
  }
  if (exact && (exact->rho.size() != n || exact->u.size() != n || exact->e.size() != n || exact->p.size() != n)) {
    throw std::invalid_argument("ProfileTable: exact column lengths differ");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x[i] > x[i - 1])) {
      throw std::invalid_argument("ProfileTable: x must be strictly increasing");
    }
  }
}

Norms difference_norms(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw GridMismatch("difference_norms: length mismatch");
  }
  Norms n;
  if (a.empty()) {
    return n;
  }
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    sum_abs += d;
    sum_sq += d * d;
    n.linf = std::max(n.linf, d);
  }
  const double count = static_cast<double>(a.size());
  n.l1 = sum_abs / count;
  n.l2 = std::sqrt(sum_sq / count);
  return n;
}

NormReport error_norms(const ProfileTable& computed, const ProfileTable& exact,
                       std::optional<double> contact_estimate) {
  computed.validate();
  exact.validate();
  if (computed.x != exact.x) {
    throw GridMismatch("error_norms: x grids differ");
  }
  NormReport r;
  r.rho = difference_norms(computed.rho, exact.rho);
  r.u = difference_norms(computed.u, exact.u);
  r.e = difference_norms(computed.e, exact.e);
  r.p = difference_norms(computed.p, exact.p);
  const auto xs_c = locate_shock(computed, contact_estimate);
  const auto xs_e = locate_shock(exact, contact_estimate);
  if (xs_c && xs_e) {
    r.shock_position_error = *xs_c - *xs_e;
  }
  return r;
}

std::optional<double> locate_shock(const ProfileTable& profile, std::optional<double> contact_estimate) {
  profile.validate();
  const std::size_t n = profile.size();
  if (n < 3) {
    throw std::invalid_argument("locate_shock: need at least 3 nodes");
  }
  const double centre = 0.5 * (profile.x.front() + profile.x.back());
  double best = -1.0;
  double best_x = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double mid = 0.5 * (profile.x[i] + profile.x[i + 1]);
    const bool eligible = contact_estimate ? profile.x[i] >= *contact_estimate : mid >= centre;
    if (!eligible) {
      continue;
    }
    const double grad = std::abs(profile.rho[i + 1] - profile.rho[i]) / (profile.x[i + 1] - profile.x[i]);
    if (grad >= best) {
      best = grad;
      best_x = mid;
    }
  }
  if (best < kShockGradientThreshold) {
    return std::nullopt;
  }
  return best_x;
}

Moments conservation_totals(const FlowField& field) {
  Moments m;
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const NodeState& s = field.at(i, j);
      m.mass += s.rho;
      m.momentum += s.rho * s.vel;
      m.energy += s.rho * s.etot;
    }
  }
  return m;
}

ProfileTable field_profile(const FlowField& field, const GasModel& g) {
  ProfileTable table;
  const double rows = field.ny();
  for (int i = 0; i < field.nx(); ++i) {
    double rho = 0.0;
    double u = 0.0;
    double e = 0.0;
    double p = 0.0;
    for (int j = 0; j < field.ny(); ++j) {
      const NodeState& s = field.at(i, j);
      const double ei = internal_energy(s);
      rho += s.rho;
      u += s.vel.x;
      e += ei;
      p += pressure(s.rho, ei, g);
    }
    table.push(i + 0.5, rho / rows, u / rows, e / rows, p / rows);
  }
  return table;
}

double row_spread(const FlowField& field) {
  double spread = 0.0;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); };
  for (int j = 1; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const NodeState& s = field.at(i, j);
      const NodeState& r = field.at(i, 0);
      spread = std::max({spread, rel(s.rho, r.rho), rel(s.vel.x, r.vel.x), rel(s.vel.y, r.vel.y),
                         rel(s.etot, r.etot)});
    }
  }
  return spread;
}

double total_wall_time(std::span<const StepReport> reports) noexcept {
  double t = 0.0;
  for (const StepReport& r : reports) {
    t += r.wall_time;
  }
  return t;
}

double timing_comparison(std::span<const StepReport> reports_1d, std::span<const StepReport> reports_2d) {
  if (reports_1d.size() != reports_2d.size()) {
    std::ostringstream os;
    os << "timing_comparison: step counts differ (" << reports_1d.size() << " vs " << reports_2d.size() << ")";
    throw std::invalid_argument(os.str());
  }
  const double t1 = total_wall_time(reports_1d);
  if (!(t1 > 0.0)) {
    throw std::invalid_argument("timing_comparison: 1-D wall time is zero");
  }
  return total_wall_time(reports_2d) / t1;
}

}  // namespace lbshock
