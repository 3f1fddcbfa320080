#include "lbshock/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lbshock::riemann {

namespace {

struct Gas {
  double gamma;
  double g1;  // (gamma - 1) / (2 gamma)
  double g2;  // (gamma + 1) / (2 gamma)
  double g3;  // 2 gamma / (gamma - 1)
  double g4;  // 2 / (gamma - 1)
  double g5;  // 2 / (gamma + 1)
  double g6;  // (gamma - 1) / (gamma + 1)
  double g7;  // (gamma - 1) / 2

  explicit Gas(double g)
    : gamma(g),
      g1((g - 1.0) / (2.0 * g)),
      g2((g + 1.0) / (2.0 * g)),
      g3(2.0 * g / (g - 1.0)),
      g4(2.0 / (g - 1.0)),
      g5(2.0 / (g + 1.0)),
      g6((g - 1.0) / (g + 1.0)),
      g7(0.5 * (g - 1.0)) {}

  double sound(const PrimitiveState& s) const { return std::sqrt(gamma * s.p / s.rho); }
};

struct Branch {
  double f;
  double df;
};

// One side of the pressure function together with its derivative.
Branch side_function(const Gas& gas, const PrimitiveState& s, double p) {
  const double a = gas.sound(s);
  if (p > s.p) {
    const double ak = gas.g5 / s.rho;
    const double bk = gas.g6 * s.p;
    const double q = std::sqrt(ak / (bk + p));
    return {(p - s.p) * q, (1.0 - 0.5 * (p - s.p) / (bk + p)) * q};
  }
  const double ratio = p / s.p;
  return {gas.g4 * a * (std::pow(ratio, gas.g1) - 1.0), 1.0 / (s.rho * a) * std::pow(ratio, -gas.g2)};
}

double total_function(const Gas& gas, const PrimitiveState& l, const PrimitiveState& r, double p,
                      double* derivative) {
  const Branch fl = side_function(gas, l, p);
  const Branch fr = side_function(gas, r, p);
  if (derivative != nullptr) {
    *derivative = fl.df + fr.df;
  }
  return fl.f + fr.f + (r.u - l.u);
}

double star_density(const Gas& gas, const PrimitiveState& s, double p_star) {
  const double ratio = p_star / s.p;
  if (p_star > s.p) {
    return s.rho * (ratio + gas.g6) / (gas.g6 * ratio + 1.0);
  }
  return s.rho * std::pow(ratio, 1.0 / gas.gamma);
}

void validate_state(const PrimitiveState& s, const char* side) {
  if (!(s.rho > 0.0) || !(s.p > 0.0)) {
    std::ostringstream os;
    os << side << " state must have rho > 0 and p > 0";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

RiemannSolution solve_star(const PrimitiveState& left, const PrimitiveState& right, double gamma) {
  validate_state(left, "left");
  validate_state(right, "right");
  if (!(gamma > 1.0)) {
    throw std::invalid_argument("gamma must exceed 1");
  }
  const Gas gas(gamma);
  const double al = gas.sound(left);
  const double ar = gas.sound(right);
  const double du = right.u - left.u;
  if (gas.g4 * (al + ar) <= du) {
    throw VacuumGenerated("initial data generate vacuum");
  }

  // Two-rarefaction approximation as the starting iterate.
  const double guess =
      std::pow((al + ar - gas.g7 * du) / (al / std::pow(left.p, gas.g1) + ar / std::pow(right.p, gas.g1)),
               1.0 / gas.g1);

  // f is increasing in p and negative as p -> 0+ (no-vacuum condition), so
  // [lo, hi] with f(lo) < 0 < f(hi) brackets the root.
  double lo = 0.0;
  double hi = std::max({guess, left.p, right.p});
  while (total_function(gas, left, right, hi, nullptr) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }

  double p = std::clamp(guess, std::nextafter(lo, hi), hi);
  int iter = 0;
  bool converged = false;
  for (; iter < kMaxNewtonIterations; ++iter) {
    double df = 0.0;
    const double f = total_function(gas, left, right, p, &df);
    if (f == 0.0) {
      converged = true;
      break;
    }
    if (f < 0.0) {
      lo = p;
    } else {
      hi = p;
    }
    double next = p - f / df;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < kNewtonTolerance) {
      converged = true;
      ++iter;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("pressure iteration did not converge");
  }

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma = gamma;
  sol.p_star = p;
  sol.iterations = iter;
  const Branch fl = side_function(gas, left, p);
  const Branch fr = side_function(gas, right, p);
  sol.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr.f - fl.f);
  sol.rho_star_left = star_density(gas, left, p);
  sol.rho_star_right = star_density(gas, right, p);

  if (p > left.p) {
    sol.left_wave = WaveType::kShock;
    const double s = left.u - al * std::sqrt(gas.g2 * p / left.p + gas.g1);
    sol.left_speeds = {s, s};
  } else {
    sol.left_wave = WaveType::kRarefaction;
    const double a_star = al * std::pow(p / left.p, gas.g1);
    sol.left_speeds = {left.u - al, sol.u_star - a_star};
  }
  if (p > right.p) {
    sol.right_wave = WaveType::kShock;
    const double s = right.u + ar * std::sqrt(gas.g2 * p / right.p + gas.g1);
    sol.right_speeds = {s, s};
  } else {
    sol.right_wave = WaveType::kRarefaction;
    const double a_star = ar * std::pow(p / right.p, gas.g1);
    sol.right_speeds = {right.u + ar, sol.u_star + a_star};
  }
  return sol;
}

PrimitiveState sample(const RiemannSolution& sol, double xi) {
  const Gas gas(sol.gamma);
  if (xi <= sol.u_star) {
    const PrimitiveState& l = sol.left;
    const PrimitiveState star{sol.rho_star_left, sol.u_star, sol.p_star};
    if (sol.left_wave == WaveType::kShock) {
      return xi <= sol.left_speeds.head ? l : star;
    }
    if (xi <= sol.left_speeds.head) {
      return l;
    }
    if (xi > sol.left_speeds.tail) {
      return star;
    }
    const double al = gas.sound(l);
    const double c = gas.g5 + gas.g6 / al * (l.u - xi);
    return {l.rho * std::pow(c, gas.g4), gas.g5 * (al + gas.g7 * l.u + xi), l.p * std::pow(c, gas.g3)};
  }

  const PrimitiveState& r = sol.right;
  const PrimitiveState star{sol.rho_star_right, sol.u_star, sol.p_star};
  if (sol.right_wave == WaveType::kShock) {
    return xi >= sol.right_speeds.head ? r : star;
  }
  if (xi >= sol.right_speeds.head) {
    return r;
  }
  if (xi < sol.right_speeds.tail) {
    return star;
  }
  const double ar = gas.sound(r);
  const double c = gas.g5 - gas.g6 / ar * (r.u - xi);
  return {r.rho * std::pow(c, gas.g4), gas.g5 * (-ar + gas.g7 * r.u + xi), r.p * std::pow(c, gas.g3)};
}

double pressure_function(const RiemannSolution& sol, double p) {
  return total_function(Gas(sol.gamma), sol.left, sol.right, p, nullptr);
}

double rankine_hugoniot_residual(const RiemannSolution& sol) {
  const double gm1 = sol.gamma - 1.0;
  auto jump = [gm1](const PrimitiveState& a, const PrimitiveState& b, double s) {
    auto energy = [gm1](const PrimitiveState& w) { return w.p / gm1 + 0.5 * w.rho * w.u * w.u; };
    const double mass = (b.rho * b.u - a.rho * a.u) - s * (b.rho - a.rho);
    const double mom = (b.rho * b.u * b.u + b.p - a.rho * a.u * a.u - a.p) - s * (b.rho * b.u - a.rho * a.u);
    const double en = (b.u * (energy(b) + b.p) - a.u * (energy(a) + a.p)) - s * (energy(b) - energy(a));
    return std::max({std::abs(mass), std::abs(mom), std::abs(en)});
  };
  double residual = 0.0;
  if (sol.left_wave == WaveType::kShock) {
    residual = std::max(residual, jump(sol.left, {sol.rho_star_left, sol.u_star, sol.p_star}, sol.left_speeds.head));
  }
  if (sol.right_wave == WaveType::kShock) {
    residual =
        std::max(residual, jump({sol.rho_star_right, sol.u_star, sol.p_star}, sol.right, sol.right_speeds.head));
  }
  return residual;
}

ProfileTable sod_profile(int nx, double x0, double t, const PrimitiveState& left, const PrimitiveState& right,
                         double gamma) {
  if (nx < 1 || t < 0.0) {
    throw std::invalid_argument("sod_profile: need nx >= 1 and t >= 0");
  }
  std::optional<RiemannSolution> sol;
  if (t > 0.0) {
    sol = solve_star(left, right, gamma);
  }
  ProfileTable table;
  table.x.reserve(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) {
    const double x = i + 0.5;
    PrimitiveState w;
    if (sol) {
      w = sample(*sol, (x - x0) / t);
    } else {
      w = x < x0 ? left : right;
    }
    table.push(x, w.rho, w.u, w.p / ((gamma - 1.0) * w.rho), w.p);
  }
  return table;
}

}  // namespace lbshock::riemann
