#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "eplab/errors.hpp"
#include "eplab/io.hpp"

using namespace eplab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "eplab_unit_io";
  fs::create_directories(dir);
  return dir / name;
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

TEST_CASE("checkpoint round trip is bit exact") {
  Physics phys;
  phys.N = 4;
  phys.gamma = 1.4;
  phys.K = 0.3;
  phys.g = 2.5;
  phys.beta = 0.7;
  auto s = make_state(phys, 3.0, 97);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s.rho[i] = std::exp(-0.1 * i) / 3.0;
    s.u[i] = std::sin(0.37 * i) * 1e-3;
  }
  s.t = 0.1 + 0.2;
  s.reset_floor();
  const auto path = scratch("state.chk");
  save_checkpoint(path, s);
  const auto r = load_checkpoint(path);
  CHECK(r.phys.N == 4);
  CHECK(r.phys.gamma == phys.gamma);
  CHECK(r.phys.K == phys.K);
  CHECK(r.phys.g == phys.g);
  CHECK(r.phys.beta == phys.beta);
  CHECK(r.t == s.t);
  CHECK(r.floor == s.floor);
  CHECK(r.grid.r_max() == s.grid.r_max());
  CHECK(r.grid.size() == s.grid.size());
  CHECK(r.rho == s.rho);
  CHECK(r.u == s.u);
}

TEST_CASE("damaged checkpoints are rejected") {
  const auto path = scratch("bad.chk");
  {
    std::ofstream out(path, std::ios::binary);
    out << "not a checkpoint";
  }
  CHECK_THROWS_AS(load_checkpoint(path), InvalidInput);

  auto s = make_state(Physics{}, 1.0, 16);
  const auto good = scratch("good.chk");
  save_checkpoint(good, s);
  const auto size = fs::file_size(good);
  fs::resize_file(good, size - 8);
  CHECK_THROWS_AS(load_checkpoint(good), InvalidInput);
}

TEST_CASE("csv headers") {
  const auto prof = solve_lane_emden(1.0, 1.0, 4.0, 1e-2);
  const auto p1 = scratch("profile.csv");
  write_profile_csv(p1, prof);
  CHECK(first_line(p1) == "z,y,dy");

  const auto traj = integrate_scale(3, 1.0, 1.0, 0.0, 0.5, 0.1);
  const auto p2 = scratch("trajectory.csv");
  write_trajectory_csv(p2, traj);
  CHECK(first_line(p2) == "t,a,adot");

  auto s = make_state(Physics{}, 1.0, 16);
  s.rho.assign(16, 1.0);
  const auto p3 = scratch("snap.csv");
  write_snapshot_csv(p3, s);
  CHECK(first_line(p3) == "r,rho,u,phi_r");

  DiagnosticsRow row;
  const auto p4 = scratch("diag.csv");
  write_diagnostics_csv(p4, {row});
  CHECK(first_line(p4) == "t,M,E_kin,E_int,E_pot,E_tot,H,Hdot_f,Hddot_f,Hdot_m,Hddot_m,R_support");
  std::ifstream in(p4);
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  CHECK(line.find(",,,") != std::string::npos);
}

TEST_CASE("decimal formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) {
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
}
