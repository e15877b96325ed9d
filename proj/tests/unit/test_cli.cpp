#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "eplab_tools/commands.hpp"
#include "eplab_tools/config.hpp"
#include "eplab_tools/manifest.hpp"
#include "json.hpp"

using namespace eplab::tools;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path root() {
  static const fs::path r = [] {
    const fs::path p = fs::temp_directory_path() / "eplab_unit_cli";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return r;
}

RunContext context(unsigned threads = 1) {
  RunContext ctx;
  ctx.out_root = root();
  ctx.threads = threads;
  return ctx;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sha256 of a known message") {
  const auto p = root() / "abc.txt";
  {
    std::ofstream out(p, std::ios::binary);
    out << "abc";
  }
  CHECK(sha256_file(p) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("lane-emden run writes a manifest with checksums") {
  ScenarioConfig cfg(Command::lane_emden);
  cfg.set("run.name", "le_manifest");
  cfg.set("polytrope.z_max", "5");
  REQUIRE(run_command(cfg, context()) == kExitOk);
  const fs::path dir = root() / "le_manifest";
  const auto m = read_json(dir / "manifest.json");
  CHECK(m["status"] == "completed");
  CHECK(m["exit_code"] == 0);
  CHECK(m["command"] == "lane-emden");
  CHECK(m["config_ini"].get<std::string>() == cfg.to_ini());
  CHECK(ScenarioConfig::parse(Command::lane_emden, m["config_ini"].get<std::string>()) == cfg);
  REQUIRE(m["files"].size() == 2);
  for (const auto& f : m["files"]) {
    const fs::path p = dir / f["path"].get<std::string>();
    REQUIRE(fs::exists(p));
    CHECK(f["bytes"] == fs::file_size(p));
    CHECK(f["sha256"] == sha256_file(p));
  }
  const auto summary = read_json(dir / "summary.json");
  CHECK(summary["first_zero"].get<double>() == doctest::Approx(3.14159265358979).epsilon(1e-10));
  CHECK_FALSE(fs::exists(dir / "manifest.json.tmp"));
}

TEST_CASE("repeated runs produce identical artifacts") {
  ScenarioConfig cfg(Command::family);
  cfg.set("similarity.residual_levels", "2");
  cfg.set("run.name", "fam_a");
  REQUIRE(run_command(cfg, context()) == kExitOk);
  cfg.set("run.name", "fam_b");
  REQUIRE(run_command(cfg, context()) == kExitOk);
  const auto a = read_json(root() / "fam_a" / "manifest.json");
  const auto b = read_json(root() / "fam_b" / "manifest.json");
  CHECK(a["files"] == b["files"]);
  CHECK(slurp(root() / "fam_a" / "residual.json") == slurp(root() / "fam_b" / "residual.json"));
}

TEST_CASE("rerunning a name replaces the previous run only") {
  ScenarioConfig cfg(Command::classify);
  cfg.set("run.name", "cls");
  REQUIRE(run_command(cfg, context()) == kExitOk);
  REQUIRE(run_command(cfg, context()) == kExitOk);
  fs::create_directories(root() / "foreign");
  std::ofstream(root() / "foreign" / "notes.txt") << "keep";
  cfg.set("run.name", "foreign");
  CHECK(run_command(cfg, context()) == kExitInvalidInput);
  CHECK(fs::exists(root() / "foreign" / "notes.txt"));
}

TEST_CASE("invalid input exits 1 before creating a run directory") {
  ScenarioConfig cfg(Command::lane_emden);
  cfg.set("run.name", "bad_index");
  cfg.set("polytrope.n", "-2");
  CHECK(run_command(cfg, context()) == kExitInvalidInput);
  CHECK_FALSE(fs::exists(root() / "bad_index"));
}

TEST_CASE("support reaching the boundary exits 3") {
  ScenarioConfig cfg(Command::evolve);
  cfg.set("run.name", "edge");
  cfg.set("initial.profile", "uniform");
  cfg.set("initial.radius", "1.99");
  cfg.set("hydro.r_max", "2");
  cfg.set("hydro.cells", "128");
  cfg.set("hydro.t_end", "0.1");
  cfg.set("hydro.snapshot_every", "0.05");
  CHECK(run_command(cfg, context()) == kExitSupportHitBoundary);
  const auto m = read_json(root() / "edge" / "manifest.json");
  CHECK(m["exit_code"] == 3);
}

TEST_CASE("sweep output does not depend on the thread count") {
  ScenarioConfig cfg(Command::sweep);
  cfg.set("run.name", "sweep1");
  REQUIRE(run_command(cfg, context(1)) == kExitOk);
  cfg.set("run.name", "sweep4");
  REQUIRE(run_command(cfg, context(4)) == kExitOk);
  const auto a = slurp(root() / "sweep1" / "sweep.csv");
  CHECK(a == slurp(root() / "sweep4" / "sweep.csv"));
  CHECK(read_json(root() / "sweep1" / "manifest.json")["files"] ==
        read_json(root() / "sweep4" / "manifest.json")["files"]);
  CHECK(std::count(a.begin(), a.end(), '\n') == 41);
}
