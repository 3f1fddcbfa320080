#include "lbshock/gas.hpp"

#include <sstream>

namespace lbshock {

namespace {

std::string negative_energy_message(double e) {
  std::ostringstream os;
  os << "negative internal energy " << e;
  return os.str();
}

}  // namespace

NegativeEnergy::NegativeEnergy(double e) : std::runtime_error(negative_energy_message(e)), value_(e) {}

GasModel::GasModel(int dim, double gamma, double sigma, bool allow_sigma_override)
  : dim_(dim), gamma_(gamma), sigma_(sigma) {
  if (dim != 1 && dim != 2) {
    throw InvalidGasModel("lattice dimension must be 1 or 2");
  }
  if (!(gamma > 1.0) || !(gamma <= 1.0 + 2.0 / dim)) {
    std::ostringstream os;
    os << "gamma=" << gamma << " outside (1, " << 1.0 + 2.0 / dim << "] for dim=" << dim;
    throw InvalidGasModel(os.str());
  }
  if (dim == 1) {
    const bool in_range = allow_sigma_override ? (sigma >= 0.0 && sigma < 1.0)
                                               : (sigma >= kSigmaMin && sigma <= kSigmaMax);
    if (!in_range) {
      std::ostringstream os;
      os << "sigma=" << sigma << " outside ";
      if (allow_sigma_override) {
        os << "[0, 1)";
      } else {
        os << "[" << kSigmaMin << ", " << kSigmaMax << "]";
      }
      throw InvalidGasModel(os.str());
    }
  }
}

double internal_energy(const NodeState& s) {
  const double e = s.etot - 0.5 * s.vel.norm2();
  if (e >= 0.0) {
    return e;
  }
  if (e >= -kEnergyClampBand) {
    return 0.0;
  }
  throw NegativeEnergy(e);
}

}  // namespace lbshock
