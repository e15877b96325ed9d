#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eplab/errors.hpp"
#include "eplab_tools/commands.hpp"
#include "eplab_tools/config.hpp"

namespace {

using eplab::tools::Command;

// Convenience flags: flag name -> section.key.
const std::map<Command, std::vector<std::pair<std::string, std::string>>>& shortcuts() {
  static const std::map<Command, std::vector<std::pair<std::string, std::string>>> m = {
      {Command::lane_emden,
       {{"--n", "polytrope.n"},
        {"--alpha", "polytrope.alpha"},
        {"--zmax", "polytrope.z_max"},
        {"--step", "polytrope.h"},
        {"--kind", "polytrope.kind"},
        {"--N", "polytrope.N"},
        {"--mu", "polytrope.mu"},
        {"--K", "polytrope.K"}}},
      {Command::family,
       {{"--kind", "similarity.kind"},
        {"--N", "similarity.N"},
        {"--K", "similarity.K"},
        {"--lambda", "similarity.lambda"},
        {"--mu", "similarity.mu"},
        {"--alpha", "similarity.alpha"},
        {"--a0", "similarity.a0"},
        {"--a1", "similarity.a1"},
        {"--t-end", "similarity.t_end"},
        {"--zmax", "similarity.z_max"},
        {"--times", "similarity.residual_times"}}},
      {Command::evolve,
       {{"--N", "hydro.N"},
        {"--gamma", "hydro.gamma"},
        {"--K", "hydro.K"},
        {"--g", "hydro.g"},
        {"--beta", "hydro.beta"},
        {"--cells", "hydro.cells"},
        {"--r-max", "hydro.r_max"},
        {"--t-end", "hydro.t_end"},
        {"--every", "hydro.snapshot_every"},
        {"--profile", "initial.profile"}}},
      {Command::classify,
       {{"--N", "diagnostics.N"},
        {"--gamma", "diagnostics.gamma"},
        {"--beta", "diagnostics.beta"},
        {"--E0", "diagnostics.E0"},
        {"--M", "diagnostics.M"},
        {"--K", "diagnostics.K"},
        {"--g", "diagnostics.g"},
        {"--sup", "diagnostics.sup_functional"},
        {"--epsilon", "diagnostics.epsilon"},
        {"--margin", "diagnostics.epsilon_margin"},
        {"--domain", "diagnostics.domain_measure"},
        {"--H0", "diagnostics.H0"},
        {"--Hdot0", "diagnostics.Hdot0"}}},
      {Command::sweep,
       {{"--N", "sweep.N"}, {"--beta", "sweep.beta"}, {"--cases", "sweep.cases"}}},
      {Command::verify, {{"--criteria", "verify.criteria"}}},
  };
  return m;
}

const std::map<Command, std::string>& descriptions() {
  static const std::map<Command, std::string> m = {
      {Command::lane_emden, "solve a Lane-Emden or generalized profile ODE"},
      {Command::family, "build a self-similar collapse family and check its PDE residual"},
      {Command::evolve, "run the radial finite-volume solver and classify the run"},
      {Command::classify, "classify hypotheses from supplied diagnostics"},
      {Command::sweep, "classify a grid of (N, beta, gamma, energy) cells"},
      {Command::verify, "run the acceptance checks"},
  };
  return m;
}

struct Invocation {
  Command command = Command::verify;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial Euler-Poisson laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("eplab 0.1.0"));

  std::string config_path;
  std::string out_dir = "runs";
  std::string name;
  unsigned seed = 0;
  unsigned threads = 1;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "INI scenario file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "root directory for run outputs")->capture_default_str();
  app.add_option("--seed", seed, "reserved; all algorithms are deterministic");
  app.add_option("--threads", threads, "worker threads (sweep only)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--name", name, "run directory name (run.name)");
  app.add_option("--set", overrides, "override section.key=value (repeatable)");

  Invocation inv;
  std::map<Command, std::map<std::string, std::string>> flag_storage;
  for (auto c : {Command::lane_emden, Command::family, Command::evolve, Command::classify,
                 Command::sweep, Command::verify}) {
    auto* sub = app.add_subcommand(std::string(eplab::tools::to_string(c)), descriptions().at(c));
    sub->fallthrough();
    sub->callback([&inv, c] { inv.command = c; });
    for (const auto& [flag, key] : shortcuts().at(c)) {
      sub->add_option(flag, flag_storage[c][key], "sets " + key);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? eplab::tools::kExitOk : eplab::tools::kExitInvalidInput;
  }

  try {
    auto cfg = config_path.empty()
                   ? eplab::tools::ScenarioConfig(inv.command)
                   : eplab::tools::ScenarioConfig::load(inv.command, config_path);
    const auto* sub = app.get_subcommand(std::string(eplab::tools::to_string(inv.command)));
    for (const auto& [flag, key] : shortcuts().at(inv.command)) {
      if (sub->count(flag) > 0) cfg.set(key, flag_storage[inv.command][key]);
    }
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw eplab::InvalidInput("--set expects section.key=value");
      cfg.set(o.substr(0, eq), o.substr(eq + 1));
    }
    if (!name.empty()) cfg.set("run", "name", name);

    eplab::tools::RunContext ctx;
    ctx.out_root = out_dir;
    ctx.seed = seed;
    ctx.threads = threads;
    ctx.log = &std::cout;
    return eplab::tools::run_command(cfg, ctx);
  } catch (const eplab::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return eplab::tools::kExitInvalidInput;
  }
}
