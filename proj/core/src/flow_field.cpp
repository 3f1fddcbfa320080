#include "lbshock/flow_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbshock {

FlowField::FlowField(int dim, int nx, int ny, std::array<BoundaryMode, 2> modes, int ghost,
                     const NodeState& fill)
  : dim_(dim), nx_(nx), ny_(ny), modes_(modes), gx_(0), gy_(0) {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("FlowField: dim must be 1 or 2");
  }
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("FlowField: node counts must be positive");
  }
  if (dim == 1 && (ny != 1 || modes[1] != BoundaryMode::kPeriodic)) {
    throw std::invalid_argument("FlowField: 1-D fields have ny == 1 and a periodic y axis");
  }
  if (ghost < 0) {
    throw std::invalid_argument("FlowField: negative ghost width");
  }
  gx_ = modes[0] == BoundaryMode::kGhostExtrapolate ? ghost : 0;
  gy_ = modes[1] == BoundaryMode::kGhostExtrapolate ? ghost : 0;
  states_.assign(static_cast<std::size_t>(stored_nx()) * static_cast<std::size_t>(stored_ny()), fill);
}

void FlowField::apply_boundaries() {
  for (int j = -gy_; j < ny_ + gy_; ++j) {
    const int jc = std::clamp(j, 0, ny_ - 1);
    for (int i = -gx_; i < nx_ + gx_; ++i) {
      if (is_interior(i, j)) {
        continue;
      }
      const int ic = std::clamp(i, 0, nx_ - 1);
      at(i, j) = at(ic, jc);
    }
  }
}

FlowField apply_boundaries(FlowField field) {
  field.apply_boundaries();
  return field;
}

}  // namespace lbshock
