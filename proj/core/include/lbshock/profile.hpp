#ifndef LBSHOCK_PROFILE_HPP_
#define LBSHOCK_PROFILE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

namespace lbshock {

// Longitudinal profile sampled at node positions. Exact columns are filled
// when the profile is paired with an analytical solution.
struct ProfileTable {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> u;
  std::vector<double> e;
  std::vector<double> p;

  struct Exact {
    std::vector<double> rho;
    std::vector<double> u;
    std::vector<double> e;
    std::vector<double> p;
  };
  std::optional<Exact> exact;

  std::size_t size() const noexcept { return x.size(); }

  void push(double xi, double rho_i, double u_i, double e_i, double p_i) {
    x.push_back(xi);
    rho.push_back(rho_i);
    u.push_back(u_i);
    e.push_back(e_i);
    p.push_back(p_i);
  }

  // Throws std::invalid_argument if the columns differ in length or x is not
  // strictly increasing.
  void validate() const;
};

}  // namespace lbshock

#endif  // LBSHOCK_PROFILE_HPP_
