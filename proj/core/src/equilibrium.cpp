#include "lbshock/equilibrium.hpp"

#include <cmath>
#include <sstream>

namespace lbshock {

const DirectionSet& DirectionSet::for_dim(int dim) {
  static const DirectionSet line(1, {{1, 0}, {-1, 0}});
  static const DirectionSet square(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  if (dim == 1) {
    return line;
  }
  if (dim == 2) {
    return square;
  }
  throw std::invalid_argument("DirectionSet: dim must be 1 or 2");
}

double rest_density(double rho, const GasModel& g) noexcept {
  return g.dim() == 1 ? g.sigma() * rho : 0.0;
}

namespace {

int rest_multiplicity(const GasModel& g) noexcept { return g.dim() == 1 ? 1 : 0; }
int level_multiplicity(const GasModel& g) noexcept { return 2 * g.dim(); }

}  // namespace

VelocityLevels velocity_levels(double rho, double e, double d0, const GasModel& g) {
  const double moving = rho - rest_multiplicity(g) * d0;
  if (!(moving > 0.0)) {
    std::ostringstream os;
    os << "moving density rho - b0*d0 = " << moving << " is not positive";
    throw DegenerateDensity(os.str());
  }
  const double target = g.dim() * (g.gamma() - 1.0) * e * rho / moving;
  int c1 = static_cast<int>(std::floor(std::sqrt(target)));
  // sqrt rounding can land one off an exact square.
  while (c1 > 0 && static_cast<double>(c1) * c1 > target) {
    --c1;
  }
  while (static_cast<double>(c1 + 1) * (c1 + 1) <= target) {
    ++c1;
  }
  return {c1, c1 + 1};
}

LevelDensities level_densities(double rho, double e, double d0, int c1, int c2, const GasModel& g) {
  const double moving = rho - rest_multiplicity(g) * d0;
  const double thermal = g.dim() * (g.gamma() - 1.0) * rho * e;
  const double s1 = static_cast<double>(c1) * c1;
  const double s2 = static_cast<double>(c2) * c2;
  const double b = level_multiplicity(g);
  double d1 = (s2 * moving - thermal) / (b * (s2 - s1));
  double d2 = (thermal - s1 * moving) / (b * (s2 - s1));
  if (d1 < -kLevelDensityTolerance || d2 < -kLevelDensityTolerance) {
    std::ostringstream os;
    os << "level densities d1=" << d1 << " d2=" << d2 << " for c1=" << c1 << " c2=" << c2;
    throw NegativeLevelDensity(os.str());
  }
  if (d1 < 0.0) {
    d1 = 0.0;
  }
  if (d2 < 0.0) {
    d2 = 0.0;
  }
  return {d1, d2};
}

NodeEquilibrium node_equilibrium(const NodeState& s, const GasModel& g) {
  const double e = internal_energy(s);
  NodeEquilibrium eq;
  eq.d0 = rest_density(s.rho, g);
  const VelocityLevels levels = velocity_levels(s.rho, e, eq.d0, g);
  eq.c1 = levels.c1;
  eq.c2 = levels.c2;
  const LevelDensities d = level_densities(s.rho, e, eq.d0, eq.c1, eq.c2, g);
  eq.d1 = d.d1;
  eq.d2 = d.d2;
  eq.phi = phi(e, g);
  return eq;
}

CornerSet corner_weights(const Vec2& vel, int dim) noexcept {
  struct AxisSplit {
    int base;
    double frac;
  };
  auto split = [](double v) {
    const double f = std::floor(v);
    return AxisSplit{static_cast<int>(f), v - f};
  };
  const AxisSplit sx = split(vel.x);
  const AxisSplit sy = dim == 2 ? split(vel.y) : AxisSplit{0, 0.0};

  CornerSet out;
  for (int dy = 0; dy < 2; ++dy) {
    const double wy = dy == 0 ? 1.0 - sy.frac : sy.frac;
    if (wy == 0.0) {
      continue;
    }
    for (int dx = 0; dx < 2; ++dx) {
      const double wx = dx == 0 ? 1.0 - sx.frac : sx.frac;
      if (wx == 0.0) {
        continue;
      }
      out.push({{sx.base + dx, sy.base + dy}, wx * wy});
    }
  }
  return out;
}

std::vector<Packet> emit_packets(const NodeState& s, const GasModel& g, const DirectionSet& dirs) {
  std::vector<Packet> packets;
  packets.reserve(32);
  for_each_packet(s, g, dirs, [&](const Packet& p) { packets.push_back(p); });
  return packets;
}

Moments reconstruct_moments(std::span<const Packet> packets) noexcept {
  Moments m;
  for (const Packet& p : packets) {
    m.mass += p.mass;
    m.momentum += p.momentum;
    m.energy += p.energy;
  }
  return m;
}

}  // namespace lbshock
