#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "lbshock/csv.hpp"

using namespace lbshock;
using namespace lbshock::cli;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("lbshock_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("defaults") {
  const RunConfig c = parse_config({"run", "--case", "sod1d"});
  CHECK(c.command == Command::kRun);
  CHECK(c.run_case == Case::kSod1d);
  CHECK(c.nx == 400);
  CHECK(c.ny == 1);
  CHECK(c.steps == 75);
  CHECK(c.gamma == 1.4);
  CHECK(c.sigma == 0.5);
  CHECK(c.deterministic);
  CHECK(c.threads == 1);
  CHECK(c.dim() == 1);

  const RunConfig two = parse_config({"run", "--case", "sod2d"});
  CHECK(two.ny == 4);
  CHECK(two.dim() == 2);
  CHECK(parse_config({"run", "--case", "sod2d", "--ny", "8"}).ny == 8);
  CHECK_FALSE(parse_config({"run", "--deterministic", "false"}).deterministic);
  CHECK(parse_config({"bench"}).command == Command::kBench);
  CHECK(parse_config({"oracle"}).command == Command::kOracle);
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(parse_config({"run", "--case", "sod1d", "--sigma", "0.7"}), ConfigError);
  CHECK(parse_config({"run", "--case", "sod1d", "--sigma", "0.7", "--allow-sigma-override"}).sigma == 0.7);
  CHECK_THROWS_AS(parse_config({"run", "--bogus"}), ConfigError);
  CHECK_THROWS_AS(parse_config({}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--case", "sod3d"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--nx", "3"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--steps", "-1"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--case", "sod1d", "--ny", "4"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--case", "sod2d", "--gamma", "2.5"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--threads", "0"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"oracle", "--left", "1", "0"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"run", "--left", "1", "0", "1"}), ConfigError);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"run", "--bogus"}).code == 1);
  CHECK(invoke({"run", "--sigma", "0.3"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"oracle", "--left", "1", "-10", "1", "--right", "1", "10", "1", "--out", "/dev/null"}).code == 1);
}

TEST_CASE("sod1d run writes the profile and report") {
  TempDir dir;
  const fs::path csv_path = dir.path / "s.csv";
  const Invocation r = invoke({"run", "--case", "sod1d", "--compare-exact", "--out", csv_path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("rho_l1: ") != std::string::npos);
  CHECK(r.out.find("shock_x: 331") != std::string::npos);
  CHECK(r.out.find("overflow_packets: 0") != std::string::npos);

  std::ifstream in(csv_path);
  const ProfileTable t = csv::read_profile(in);
  CHECK(t.size() == 400);
  CHECK(t.exact.has_value());
  const std::string text = slurp(csv_path);
  CHECK(text.rfind("x,rho,u,e,p,rho_exact,u_exact,e_exact,p_exact\n", 0) == 0);
}

TEST_CASE("zero steps reproduce the initial condition") {
  TempDir dir;
  const fs::path csv_path = dir.path / "z.csv";
  REQUIRE(invoke({"run", "--steps", "0", "--out", csv_path.string()}).code == 0);
  std::ifstream in(csv_path);
  const ProfileTable t = csv::read_profile(in);
  REQUIRE(t.size() == 400);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool left = i < 200;
    CHECK(t.rho[i] == (left ? 1.0 : 0.125));
    CHECK(t.u[i] == 0.0);
    CHECK(t.p[i] == doctest::Approx(left ? 1.0 : 0.1).epsilon(1e-15));
  }
}

TEST_CASE("repeated runs are byte-identical") {
  TempDir dir;
  const fs::path a = dir.path / "a.csv";
  const fs::path b = dir.path / "b.csv";
  REQUIRE(invoke({"run", "--case", "sod2d", "--out", a.string()}).code == 0);
  REQUIRE(invoke({"run", "--case", "sod2d", "--out", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(fs::exists(dir.path / "a_grid.csv"));
  CHECK(slurp(dir.path / "a_grid.csv") == slurp(dir.path / "b_grid.csv"));
  CHECK(slurp(dir.path / "a_grid.csv").rfind("x,y,rho,u,v,e,p\n", 0) == 0);
}

TEST_CASE("periodic test case") {
  TempDir dir;
  const Invocation r =
      invoke({"run", "--case", "periodic-test", "--nx", "64", "--ny", "8", "--steps", "20", "--seed", "4",
              "--out", (dir.path / "p.csv").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lattice: 64x8") != std::string::npos);
  CHECK(fs::exists(dir.path / "p_grid.csv"));
}

TEST_CASE("oracle output") {
  TempDir dir;
  const fs::path o = dir.path / "o.csv";
  Invocation r = invoke({"oracle", "--out", o.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("p_star: 0.3031") != std::string::npos);
  CHECK(r.out.find("u_star: 0.9274") != std::string::npos);

  r = invoke({"oracle", "--steps", "0", "--out", o.string()});
  REQUIRE(r.code == 0);
  std::ifstream in0(o);
  const ProfileTable step = csv::read_profile(in0);
  CHECK(step.rho[199] == 1.0);
  CHECK(step.rho[200] == 0.125);

  r = invoke({"oracle", "--left", "0.5", "0.2", "0.7", "--right", "0.5", "0.2", "0.7", "--out", o.string()});
  REQUIRE(r.code == 0);
  std::ifstream in1(o);
  const ProfileTable flat = csv::read_profile(in1);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    CHECK(flat.rho[i] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(flat.u[i] == doctest::Approx(0.2).epsilon(1e-12));
  }
}

TEST_CASE("bench report") {
  TempDir dir;
  const fs::path rep = dir.path / "bench.txt";
  const Invocation r =
      invoke({"bench", "--nx", "100", "--steps", "1", "--repetitions", "1", "--out", rep.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("ratio_2d_over_1d: ") != std::string::npos);
  CHECK(slurp(rep) == r.out);
}

}  // TEST_SUITE
