#ifndef LBSHOCK_FLOW_FIELD_HPP_
#define LBSHOCK_FLOW_FIELD_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lbshock/gas.hpp"

namespace lbshock {

enum class BoundaryMode { kGhostExtrapolate, kPeriodic };

inline constexpr int kDefaultGhostWidth = 4;

// Macroscopic state over an nx-by-ny lattice. Axes in ghost mode carry a band
// of `ghost` extra nodes on each side; periodic axes carry none. A 1-D field
// has ny == 1 and a periodic y axis.
//
// Nodes are addressed with interior coordinates: i in [-gx, nx + gx),
// j in [-gy, ny + gy), where gx/gy are the ghost widths actually stored.
class FlowField {
public:
  FlowField(int dim, int nx, int ny, std::array<BoundaryMode, 2> modes,
            int ghost = kDefaultGhostWidth, const NodeState& fill = {});

  static FlowField line(int nx, BoundaryMode mode, int ghost = kDefaultGhostWidth,
                        const NodeState& fill = {}) {
    return FlowField(1, nx, 1, {mode, BoundaryMode::kPeriodic}, ghost, fill);
  }

  int dim() const noexcept { return dim_; }
  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  BoundaryMode mode(int axis) const noexcept { return modes_[static_cast<std::size_t>(axis)]; }
  int ghost(int axis) const noexcept { return axis == 0 ? gx_ : gy_; }
  int stored_nx() const noexcept { return nx_ + 2 * gx_; }
  int stored_ny() const noexcept { return ny_ + 2 * gy_; }
  std::size_t interior_size() const noexcept {
    return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
  }

  bool is_interior(int i, int j) const noexcept { return i >= 0 && i < nx_ && j >= 0 && j < ny_; }
  bool is_stored(int i, int j) const noexcept {
    return i >= -gx_ && i < nx_ + gx_ && j >= -gy_ && j < ny_ + gy_;
  }

  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(j + gy_) * static_cast<std::size_t>(stored_nx()) +
           static_cast<std::size_t>(i + gx_);
  }

  NodeState& at(int i, int j = 0) noexcept { return states_[index(i, j)]; }
  const NodeState& at(int i, int j = 0) const noexcept { return states_[index(i, j)]; }

  std::span<NodeState> states() noexcept { return states_; }
  std::span<const NodeState> states() const noexcept { return states_; }

  // Copies the nearest interior state into every ghost node (zero gradient).
  // Periodic axes have no ghost storage and are untouched.
  void apply_boundaries();

  bool same_layout(const FlowField& o) const noexcept {
    return dim_ == o.dim_ && nx_ == o.nx_ && ny_ == o.ny_ && modes_ == o.modes_ && gx_ == o.gx_ &&
           gy_ == o.gy_;
  }

  friend bool operator==(const FlowField&, const FlowField&) = default;

private:
  int dim_;
  int nx_;
  int ny_;
  std::array<BoundaryMode, 2> modes_;
  int gx_;
  int gy_;
  std::vector<NodeState> states_;
};

// Free-function form of FlowField::apply_boundaries.
FlowField apply_boundaries(FlowField field);

}  // namespace lbshock

#endif  // LBSHOCK_FLOW_FIELD_HPP_
