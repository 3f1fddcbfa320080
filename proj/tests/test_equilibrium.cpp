#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "lbshock/equilibrium.hpp"
#include "test_support.hpp"

using namespace lbshock;

namespace {

// Mass and energy closure solved as a 2x2 system by Cramer's rule:
//   b1 d1       + b2 d2       = rho - b0 d0
//   b1 d1 c1^2  + b2 d2 c2^2  = D (gamma - 1) rho e
std::pair<double, double> closure_oracle(double rho, double e, double d0, int c1, int c2, int dim,
                                         double gamma) {
  const double b0 = dim == 1 ? 1.0 : 0.0;
  const double b = 2.0 * dim;
  const double r1 = rho - b0 * d0;
  const double r2 = dim * (gamma - 1.0) * rho * e;
  const double a11 = b;
  const double a12 = b;
  const double a21 = b * c1 * c1;
  const double a22 = b * c2 * c2;
  const double det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det};
}

// Opposite-distance / opposite-area rule: a corner's weight is the measure of
// the region spanned by the velocity tip and the diagonally opposite corner.
std::map<std::pair<int, int>, double> corner_oracle(Vec2 v, int dim) {
  std::map<std::pair<int, int>, double> w;
  const int fx = static_cast<int>(std::floor(v.x));
  const int fy = dim == 2 ? static_cast<int>(std::floor(v.y)) : 0;
  for (int cx = fx; cx <= fx + 1; ++cx) {
    for (int cy = fy; cy <= (dim == 2 ? fy + 1 : fy); ++cy) {
      const int ox = cx == fx ? fx + 1 : fx;
      const int oy = cy == fy ? fy + 1 : fy;
      double weight = std::abs(ox - v.x);
      if (dim == 2) {
        weight *= std::abs(oy - v.y);
      }
      if (weight > 0.0) {
        w[{cx, cy}] = weight;
      }
    }
  }
  return w;
}

}  // namespace

TEST_SUITE("equilibrium") {

TEST_CASE("direction sets are symmetric") {
  for (int dim : {1, 2}) {
    const DirectionSet& dirs = DirectionSet::for_dim(dim);
    CHECK(dirs.count() == 2 * dim);
    for (int c = 1; c <= 3; ++c) {
      int first[2] = {0, 0};
      int second[2][2] = {{0, 0}, {0, 0}};
      int third[2][2][2] = {};
      for (const Offset& u : dirs.unit_dirs()) {
        const int v[2] = {c * u.x, c * u.y};
        for (int a = 0; a < 2; ++a) {
          first[a] += v[a];
          for (int b = 0; b < 2; ++b) {
            second[a][b] += v[a] * v[b];
            for (int k = 0; k < 2; ++k) {
              third[a][b][k] += v[a] * v[b] * v[k];
            }
          }
        }
      }
      // (b / D) c^2 I restricted to the lattice axes.
      const int expected_diag = dirs.count() / dim * c * c;
      for (int a = 0; a < 2; ++a) {
        CHECK(first[a] == 0);
        for (int b = 0; b < 2; ++b) {
          const bool active = a < dim && b < dim;
          CHECK(second[a][b] == (a == b && active ? expected_diag : 0));
          for (int k = 0; k < 2; ++k) {
            CHECK(third[a][b][k] == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("rest density") {
  CHECK(rest_density(1.0, GasModel(1, 1.4, 0.5)) == 0.5);
  CHECK(rest_density(0.125, GasModel(1, 1.4, 0.5)) == 0.0625);
  CHECK(rest_density(1.0, GasModel(2)) == 0.0);
}

TEST_CASE("velocity levels") {
  const GasModel g1(1);
  const GasModel g2(2);
  auto l = velocity_levels(1.0, 2.5, 0.5, g1);
  CHECK(l.c1 == 1);
  CHECK(l.c2 == 2);
  l = velocity_levels(1.0, 2.5, 0.0, g2);
  CHECK(l.c1 == 1);
  CHECK(l.c2 == 2);
  l = velocity_levels(1.0, 0.0, 0.5, g1);
  CHECK(l.c1 == 0);
  CHECK(l.c2 == 1);
  // D (gamma-1) e rho / (rho - d0) = 0.4 * 10 / 0.5 = 8 -> floor(sqrt 8) = 2.
  l = velocity_levels(1.0, 10.0, 0.5, g1);
  CHECK(l.c1 == 2);
  // Exact square: 2 * 0.5 * 4 = 4 -> c1 = 2, not 1.
  l = velocity_levels(1.0, 4.0, 0.0, GasModel(2, 1.5));
  CHECK(l.c1 == 2);
  CHECK(l.c2 == 3);
  // With gamma = 1.4 the same product rounds to just below 4.
  CHECK(velocity_levels(1.0, 5.0, 0.0, g2).c1 == 1);
  CHECK_THROWS_AS(velocity_levels(1.0, 2.5, 1.0, g1), DegenerateDensity);
}

TEST_CASE("level densities") {
  const GasModel g1(1);
  const GasModel g2(2);
  auto d = level_densities(1.0, 2.5, 0.5, 1, 2, g1);
  CHECK(d.d1 == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(d.d2 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(2 * d.d1 + 2 * d.d2 == doctest::Approx(0.5).epsilon(1e-14));

  d = level_densities(1.0, 2.5, 0.0, 1, 2, g2);
  CHECK(d.d1 == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(d.d2 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(4 * d.d1 + 4 * d.d2 == doctest::Approx(1.0).epsilon(1e-14));

  // Lower admissibility boundary: thermal term exactly c1^2 (rho - d0).
  d = level_densities(1.0, 5.0, 0.0, 2, 3, g2);
  CHECK(d.d2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(d.d2) < 1e-15);

  CHECK_THROWS_AS(level_densities(1.0, 2.5, 0.5, 2, 3, g1), NegativeLevelDensity);
  CHECK_THROWS_AS(level_densities(1.0, 2.5, 0.5, 0, 1, g1), NegativeLevelDensity);
}

TEST_CASE("level densities agree with a direct closure solve") {
  std::mt19937_64 rng(7);
  for (int dim : {1, 2}) {
    std::uniform_real_distribution<double> gamma_d(1.05, 1.0 + 2.0 / dim);
    std::uniform_real_distribution<double> sigma_d(0.4, 0.55);
    for (int n = 0; n < 2000; ++n) {
      const GasModel g(dim, gamma_d(rng), sigma_d(rng));
      const NodeState s = test::random_state(rng, dim);
      const double e = internal_energy(s);
      const NodeEquilibrium eq = node_equilibrium(s, g);
      const auto [o1, o2] = closure_oracle(s.rho, e, eq.d0, eq.c1, eq.c2, dim, g.gamma());
      CHECK(test::rel_err(eq.d1, std::max(o1, 0.0), s.rho) < 1e-12);
      CHECK(test::rel_err(eq.d2, std::max(o2, 0.0), s.rho) < 1e-12);
      CHECK(eq.d1 >= 0.0);
      CHECK(eq.d2 >= 0.0);
      CHECK(eq.c2 == eq.c1 + 1);
    }
  }
}

TEST_CASE("corner weights") {
  SUBCASE("1-D split") {
    const CornerSet w = corner_weights({0.3, 0.0}, 1);
    REQUIRE(w.size() == 2);
    CHECK(w[0].offset == Offset{0, 0});
    CHECK(w[0].alpha == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(w[1].offset == Offset{1, 0});
    CHECK(w[1].alpha == doctest::Approx(0.3).epsilon(1e-15));
  }
  SUBCASE("on a node") {
    const CornerSet w = corner_weights({0.0, 0.0}, 1);
    REQUIRE(w.size() == 1);
    CHECK(w[0].offset == Offset{0, 0});
    CHECK(w[0].alpha == 1.0);
    const CornerSet neg = corner_weights({-2.0, 1.0}, 2);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].offset == Offset{-2, 1});
  }
  SUBCASE("bilinear") {
    const CornerSet w = corner_weights({0.25, 0.5}, 2);
    REQUIRE(w.size() == 4);
    CHECK(w[0].offset == Offset{0, 0});
    CHECK(w[0].alpha == doctest::Approx(0.375));
    CHECK(w[1].offset == Offset{1, 0});
    CHECK(w[1].alpha == doctest::Approx(0.125));
    CHECK(w[2].offset == Offset{0, 1});
    CHECK(w[2].alpha == doctest::Approx(0.375));
    CHECK(w[3].offset == Offset{1, 1});
    CHECK(w[3].alpha == doctest::Approx(0.125));
  }
  SUBCASE("negative components") {
    const CornerSet w = corner_weights({-0.25, 0.0}, 1);
    REQUIRE(w.size() == 2);
    CHECK(w[0].offset == Offset{-1, 0});
    CHECK(w[0].alpha == doctest::Approx(0.25));
    CHECK(w[1].offset == Offset{0, 0});
    CHECK(w[1].alpha == doctest::Approx(0.75));
  }
}

TEST_CASE("corner weights match the opposite-area rule and partition unity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> v_d(-3.0, 3.0);
  for (int dim : {1, 2}) {
    for (int n = 0; n < 5000; ++n) {
      const Vec2 v{v_d(rng), dim == 2 ? v_d(rng) : 0.0};
      const CornerSet w = corner_weights(v, dim);
      const auto oracle = corner_oracle(v, dim);
      REQUIRE(w.size() == oracle.size());
      double sum = 0.0;
      for (const CornerWeight& c : w) {
        CHECK(c.alpha >= 0.0);
        CHECK(c.alpha <= 1.0);
        sum += c.alpha;
        const auto it = oracle.find({c.offset.x, c.offset.y});
        REQUIRE(it != oracle.end());
        CHECK(std::abs(c.alpha - it->second) < 1e-14);
      }
      CHECK(std::abs(sum - 1.0) < 1e-14);
    }
  }
  // Integer components collapse to exactly one corner.
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      const CornerSet w = corner_weights({double(x), double(y)}, 2);
      REQUIRE(w.size() == 1);
      CHECK(w[0].alpha == 1.0);
      CHECK(w[0].offset == Offset{x, y});
    }
  }
}

TEST_CASE("packet counts") {
  const GasModel g1(1);
  const GasModel g2(2);
  const auto& d1 = DirectionSet::for_dim(1);
  const auto& d2 = DirectionSet::for_dim(2);
  CHECK(emit_packets({1.0, {0.3, 0.0}, 2.5 + 0.045}, g1, d1).size() == 10);
  CHECK(emit_packets({1.0, {0.0, 0.0}, 2.5}, g1, d1).size() == 5);
  CHECK(emit_packets({1.0, {0.3, -0.6}, 2.5 + 0.225}, g2, d2).size() == 32);
  CHECK(emit_packets({1.0, {0.3, 0.0}, 2.5 + 0.045}, g2, d2).size() == 16);
}

TEST_CASE("empty and symmetric reconstructions") {
  const Moments empty = reconstruct_moments({});
  CHECK(empty.mass == 0.0);
  CHECK(empty.momentum == Vec2{});
  CHECK(empty.energy == 0.0);

  const auto packets = emit_packets({1.0, {0.0, 0.0}, 2.5}, GasModel(1), DirectionSet::for_dim(1));
  const Moments m = reconstruct_moments(packets);
  CHECK(m.momentum.x == 0.0);
  CHECK(m.mass == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.energy == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("moment identity, positivity and destination bounds") {
  std::mt19937_64 rng(2024);
  for (int dim : {1, 2}) {
    const GasModel g(dim);
    const DirectionSet& dirs = DirectionSet::for_dim(dim);
    for (int n = 0; n < 5000; ++n) {
      const NodeState s = test::random_state(rng, dim);
      const auto packets = emit_packets(s, g, dirs);
      const Moments m = reconstruct_moments(packets);
      CHECK(test::rel_err(m.mass, s.rho) < 1e-12);
      CHECK(test::rel_err(m.momentum.x, s.rho * s.vel.x, s.rho) < 1e-12);
      CHECK(test::rel_err(m.momentum.y, s.rho * s.vel.y, s.rho) < 1e-12);
      CHECK(test::rel_err(m.energy, s.rho * s.etot) < 1e-12);

      const NodeEquilibrium eq = node_equilibrium(s, g);
      const int reach = static_cast<int>(std::ceil(std::max(std::abs(s.vel.x), std::abs(s.vel.y)))) + eq.c2;
      for (const Packet& p : packets) {
        CHECK(p.mass >= 0.0);
        CHECK(std::abs(p.dest_offset.x) <= reach);
        CHECK(std::abs(p.dest_offset.y) <= reach);
        if (dim == 1) {
          CHECK(p.dest_offset.y == 0);
          CHECK(p.momentum.y == 0.0);
        }
      }
    }
  }
}

TEST_CASE("emission is homogeneous of degree one in density") {
  std::mt19937_64 rng(5);
  for (int dim : {1, 2}) {
    const GasModel g(dim);
    const DirectionSet& dirs = DirectionSet::for_dim(dim);
    for (int n = 0; n < 500; ++n) {
      NodeState s = test::random_state(rng, dim);
      s.rho = std::min(s.rho, 1.0);
      NodeState doubled = s;
      doubled.rho *= 2.0;
      const auto a = emit_packets(s, g, dirs);
      const auto b = emit_packets(doubled, g, dirs);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(b[k].dest_offset == a[k].dest_offset);
        CHECK(std::abs(b[k].mass - 2.0 * a[k].mass) <= 1e-14 * std::max(1.0, b[k].mass));
        CHECK(std::abs(b[k].momentum.x - 2.0 * a[k].momentum.x) <= 1e-13 * std::max(1.0, std::abs(b[k].momentum.x)));
        CHECK(std::abs(b[k].energy - 2.0 * a[k].energy) <= 1e-13 * std::max(1.0, b[k].energy));
      }
    }
  }
}

}  // TEST_SUITE
