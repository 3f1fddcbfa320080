#ifndef LBSHOCK_GAS_HPP_
#define LBSHOCK_GAS_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

namespace lbshock {

// Round-off band below zero that internal energies are clamped across.
inline constexpr double kEnergyClampBand = 1e-12;

class NegativeEnergy : public std::runtime_error {
public:
  explicit NegativeEnergy(double e);
  double value() const noexcept { return value_; }

private:
  double value_;
};

class InvalidGasModel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Two-component vector in lattice units. One-dimensional runs keep y == 0.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) noexcept {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) noexcept { return a += b; }
  friend constexpr Vec2 operator-(const Vec2& a, const Vec2& b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, const Vec2& a) noexcept { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator-(const Vec2& a) noexcept { return {-a.x, -a.y}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
  constexpr double dot(const Vec2& o) const noexcept { return x * o.x + y * o.y; }
  constexpr double norm2() const noexcept { return x * x + y * y; }
};

// Ideal gas on a lattice of dimension 1 or 2 with relaxation time fixed at 1.
class GasModel {
public:
  static constexpr double kDefaultGamma = 1.4;
  static constexpr double kDefaultSigma = 0.5;
  static constexpr double kSigmaMin = 0.4;
  static constexpr double kSigmaMax = 0.55;

  // Throws InvalidGasModel unless 1 < gamma <= 1 + 2/dim, dim in {1, 2}, and
  // (for dim == 1) sigma in [0.4, 0.55]. allow_sigma_override relaxes the
  // sigma range to [0, 1).
  GasModel(int dim, double gamma = kDefaultGamma, double sigma = kDefaultSigma,
           bool allow_sigma_override = false);

  int dim() const noexcept { return dim_; }
  double gamma() const noexcept { return gamma_; }
  double sigma() const noexcept { return dim_ == 1 ? sigma_ : 0.0; }
  static constexpr double tau() noexcept { return 1.0; }

private:
  int dim_;
  double gamma_;
  double sigma_;
};

struct NodeState {
  double rho = 1.0;
  Vec2 vel{};
  double etot = 0.0;  // total specific energy E

  friend bool operator==(const NodeState&, const NodeState&) = default;
};

// e = E - |v|^2 / 2. Values in [-kEnergyClampBand, 0) are clamped to 0;
// anything lower throws NegativeEnergy.
double internal_energy(const NodeState& s);

inline double pressure(double rho, double e, const GasModel& g) noexcept {
  return (g.gamma() - 1.0) * rho * e;
}

// Non-kinetic energy share carried by every packet: [1 - (D/2)(gamma-1)] e.
inline double phi(double e, const GasModel& g) noexcept {
  return (1.0 - 0.5 * g.dim() * (g.gamma() - 1.0)) * e;
}

inline double sound_speed(double rho, double e, const GasModel& g) noexcept {
  return std::sqrt(g.gamma() * pressure(rho, e, g) / rho);
}

// Inverse of pressure(): e = p / ((gamma-1) rho).
inline double internal_energy_from_pressure(double rho, double p, double gamma) noexcept {
  return p / ((gamma - 1.0) * rho);
}

}  // namespace lbshock

#endif  // LBSHOCK_GAS_HPP_
