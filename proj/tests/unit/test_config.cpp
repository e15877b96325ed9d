#include <string>

#include "doctest.h"
#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"
#include "eplab_tools/config.hpp"
#include "eplab_tools/jobs.hpp"

using namespace eplab;
using namespace eplab::tools;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("command names") {
  for (auto c : {Command::lane_emden, Command::family, Command::evolve, Command::classify,
                 Command::sweep, Command::verify}) {
    CHECK(parse_command(to_string(c)) == c);
  }
  CHECK(to_string(Command::lane_emden) == "lane-emden");
  CHECK_THROWS_AS(parse_command("simulate"), InvalidInput);
}

TEST_CASE("defaults and canonical text round-trip") {
  for (auto c : {Command::lane_emden, Command::family, Command::evolve, Command::classify,
                 Command::sweep, Command::verify}) {
    const ScenarioConfig d(c);
    CHECK(ScenarioConfig::parse(c, d.to_ini()) == d);
    CHECK(d.text("run", "name") == std::string(to_string(c)));
  }
  auto cfg = ScenarioConfig::parse(Command::lane_emden,
                                   "[polytrope]\nn = 1.5\n; comment\nz_max = 12\n[run]\nname=x\n");
  CHECK(cfg.number("polytrope", "n") == 1.5);
  CHECK(cfg.number("polytrope", "z_max") == 12.0);
  CHECK(cfg.text("run", "name") == "x");
  CHECK(cfg.integer("polytrope", "store_every") == 100);
  const auto again = ScenarioConfig::parse(Command::lane_emden, cfg.to_ini());
  CHECK(again == cfg);
  CHECK_FALSE(again == ScenarioConfig(Command::lane_emden));
}

TEST_CASE("unknown keys and sections are rejected") {
  auto msg = error_of([] { ScenarioConfig::parse(Command::lane_emden, "[polytrope]\nindex = 2\n"); });
  CHECK(msg.find("polytrope.index") != std::string::npos);
  CHECK_THROWS_AS(ScenarioConfig::parse(Command::lane_emden, "[hydro]\ncells = 10\n"),
                  InvalidInput);
  CHECK_THROWS_AS(ScenarioConfig::parse(Command::lane_emden, "n = 2\n"), InvalidInput);
  ScenarioConfig cfg(Command::classify);
  CHECK_THROWS_AS(cfg.set("diagnostics.Q", "1"), InvalidInput);
  CHECK_THROWS_AS(cfg.set("nodot", "1"), InvalidInput);
}

TEST_CASE("values are type checked") {
  auto msg = error_of([] { ScenarioConfig::parse(Command::lane_emden, "[polytrope]\nn = abc\n"); });
  CHECK(msg.find("polytrope.n") != std::string::npos);
  ScenarioConfig cfg(Command::evolve);
  CHECK_THROWS_AS(cfg.set("hydro.cells", "12.5"), InvalidInput);
  CHECK_THROWS_AS(cfg.set("hydro.gravity", "maybe"), InvalidInput);
  CHECK_NOTHROW(cfg.set("hydro.gravity", "false"));
  CHECK_FALSE(cfg.flag("hydro", "gravity"));
  ScenarioConfig sw(Command::sweep);
  CHECK_THROWS_AS(sw.set("sweep.beta", "0, x"), InvalidInput);
  sw.set("sweep.beta", " 0 , 0.25,1 ");
  CHECK(sw.numbers("sweep", "beta") == std::vector<double>{0.0, 0.25, 1.0});
  CHECK(split_list("a, b ,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_list("").empty());
}

TEST_CASE("optional keys") {
  ScenarioConfig cfg(Command::classify);
  CHECK_FALSE(cfg.maybe_number("diagnostics", "epsilon"));
  cfg.set("diagnostics.epsilon", "0.25");
  CHECK(cfg.maybe_number("diagnostics", "epsilon") == 0.25);
}

TEST_CASE("job builders validate physics") {
  ScenarioConfig le(Command::lane_emden);
  le.set("polytrope.n", "-1");
  CHECK(error_of([&] { lane_emden_job(le); }).find("polytrope.n") != std::string::npos);

  ScenarioConfig ev(Command::evolve);
  ev.set("initial.profile", "stationary65");
  ev.set("hydro.gamma", "1.2");
  CHECK(error_of([&] { evolve_job(ev); }).find("hydro.g") != std::string::npos);
  ev.set("hydro.g", "3");
  CHECK_NOTHROW(evolve_job(ev));

  ScenarioConfig poly(Command::evolve);
  poly.set("hydro.gamma", "1.1");
  CHECK_THROWS_AS(evolve_job(poly), InvalidInput);
  poly.set("initial.profile", "nebula");
  CHECK_THROWS_AS(evolve_job(poly), InvalidInput);

  ScenarioConfig fam(Command::family);
  fam.set("similarity.mu", "3");
  CHECK_THROWS_AS(family_job(fam), InvalidInput);

  ScenarioConfig sw(Command::sweep);
  sw.set("sweep.N", "2,3");
  CHECK_THROWS_AS(sweep_job(sw), InvalidInput);
  sw.set("sweep.N", "3.5");
  CHECK_THROWS_AS(sweep_job(sw), InvalidInput);
}

TEST_CASE("default sweep grid") {
  const auto job = sweep_job(ScenarioConfig(Command::sweep));
  const auto cells = sweep_cells(job);
  REQUIRE(cells.size() == 40);
  CHECK(cells[0].N == 3);
  CHECK(cells[0].beta == 0.0);
  CHECK(cells[0].gamma == 1.2);
  CHECK(cells[1].critical);
  CHECK(cells[1].gamma == doctest::Approx(critical_gamma(3)));
  CHECK(cells[5].beta == 0.5);
  CHECK(cells[10].N == 4);
  const auto in = sweep_input(job, cells[0]);
  CHECK(in.E0 == -1.0);
  CHECK(in.N == 3);
  const auto zero = sweep_input(job, cells[2]);
  CHECK(zero.E0 == 0.0);
  const auto pos = sweep_input(job, cells[4]);
  CHECK(pos.E0 == 1.0);
}

TEST_CASE("verify criteria selection") {
  ScenarioConfig v(Command::verify);
  CHECK(verify_criteria(v).empty());
  v.set("verify.criteria", "3, 7");
  CHECK(verify_criteria(v) == std::vector<int>{3, 7});
  v.set("verify.criteria", "12");
  CHECK_THROWS_AS(verify_criteria(v), InvalidInput);
}
