#ifndef LBSHOCK_EQUILIBRIUM_HPP_
#define LBSHOCK_EQUILIBRIUM_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lbshock/gas.hpp"

namespace lbshock {

class DegenerateDensity : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NegativeLevelDensity : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Level densities below zero but above -kLevelDensityTolerance are clamped.
inline constexpr double kLevelDensityTolerance = 1e-12;

struct Offset {
  int x = 0;
  int y = 0;

  friend constexpr Offset operator+(const Offset& a, const Offset& b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Offset operator*(int s, const Offset& a) noexcept { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(const Offset&, const Offset&) = default;
  constexpr Vec2 as_vec() const noexcept { return {static_cast<double>(x), static_cast<double>(y)}; }
};

// Unit lattice directions shared by every moving velocity level.
class DirectionSet {
public:
  static const DirectionSet& for_dim(int dim);

  int dim() const noexcept { return dim_; }
  // Rest multiplicity b0; only the 1-D lattice has a populated rest level.
  int rest_count() const noexcept { return dim_ == 1 ? 1 : 0; }
  int count() const noexcept { return static_cast<int>(dirs_.size()); }
  std::span<const Offset> unit_dirs() const noexcept { return dirs_; }

private:
  DirectionSet(int dim, std::vector<Offset> dirs) : dim_(dim), dirs_(std::move(dirs)) {}

  int dim_;
  std::vector<Offset> dirs_;
};

struct NodeEquilibrium {
  int c1 = 0;
  int c2 = 1;
  double d0 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double phi = 0.0;
};

struct CornerWeight {
  Offset offset;
  double alpha = 0.0;
};

// Up to 2^D interpolation corners, in row-major order of their offsets.
class CornerSet {
public:
  void push(const CornerWeight& w) noexcept { items_[size_++] = w; }
  std::size_t size() const noexcept { return size_; }
  const CornerWeight* begin() const noexcept { return items_.data(); }
  const CornerWeight* end() const noexcept { return items_.data() + size_; }
  const CornerWeight& operator[](std::size_t i) const noexcept { return items_[i]; }

private:
  std::array<CornerWeight, 4> items_{};
  std::size_t size_ = 0;
};

struct Packet {
  Offset dest_offset;
  double mass = 0.0;
  Vec2 momentum{};
  double energy = 0.0;
};

struct Moments {
  double mass = 0.0;
  Vec2 momentum{};
  double energy = 0.0;  // rho * E
};

double rest_density(double rho, const GasModel& g) noexcept;

struct VelocityLevels {
  int c1;
  int c2;
};

// c1 = floor(sqrt(D (gamma-1) e rho / (rho - b0 d0))), c2 = c1 + 1.
VelocityLevels velocity_levels(double rho, double e, double d0, const GasModel& g);

struct LevelDensities {
  double d1;
  double d2;
};

LevelDensities level_densities(double rho, double e, double d0, int c1, int c2, const GasModel& g);

NodeEquilibrium node_equilibrium(const NodeState& s, const GasModel& g);

// Bilinear (linear in 1-D) split of a node's emission among the lattice
// corners surrounding the tip of vel. Zero-weight corners are omitted.
CornerSet corner_weights(const Vec2& vel, int dim) noexcept;

// Visits every equilibrium packet of a node in corner, level, direction order.
// The visitor receives a Packet by const reference.
// eq must be node_equilibrium(s, g) for the same gas model.
template <typename Visitor>
void for_each_packet(const NodeState& s, const NodeEquilibrium& eq, const DirectionSet& dirs, Visitor&& visit) {
  const CornerSet corners = corner_weights(s.vel, dirs.dim());
  const double half_v2 = 0.5 * s.vel.norm2();

  struct Level {
    int speed;
    double density;
  };
  const std::array<Level, 2> moving{{{eq.c1, eq.d1}, {eq.c2, eq.d2}}};
  const double rest_energy = half_v2 + eq.phi;

  for (const CornerWeight& corner : corners) {
    if (dirs.rest_count() > 0) {
      const double m = corner.alpha * eq.d0;
      visit(Packet{corner.offset, m, m * s.vel, m * rest_energy});
    }
    for (const Level& level : moving) {
      const double m = corner.alpha * level.density;
      const double c2 = static_cast<double>(level.speed) * level.speed;
      for (const Offset& unit : dirs.unit_dirs()) {
        const Offset c = level.speed * unit;
        const Vec2 xi = s.vel + c.as_vec();
        // 1/2 |v + c'|^2 + phi, expanded to keep the v.c' term explicit.
        const double zeta = half_v2 + s.vel.dot(c.as_vec()) + 0.5 * c2 + eq.phi;
        visit(Packet{corner.offset + c, m, m * xi, m * zeta});
      }
    }
  }
}

template <typename Visitor>
void for_each_packet(const NodeState& s, const GasModel& g, const DirectionSet& dirs, Visitor&& visit) {
  for_each_packet(s, node_equilibrium(s, g), dirs, std::forward<Visitor>(visit));
}

std::vector<Packet> emit_packets(const NodeState& s, const GasModel& g, const DirectionSet& dirs);

Moments reconstruct_moments(std::span<const Packet> packets) noexcept;

}  // namespace lbshock

#endif  // LBSHOCK_EQUILIBRIUM_HPP_
