#include "eplab_tools/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>
#include <vector>

#include "eplab/classify.hpp"
#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"
#include "eplab/family.hpp"
#include "eplab/io.hpp"
#include "eplab/polytrope.hpp"
#include "eplab/scale_factor.hpp"
#include "eplab_tools/acceptance.hpp"
#include "eplab_tools/jobs.hpp"
#include "eplab_tools/manifest.hpp"
#include "eplab_tools/pipeline.hpp"

namespace eplab::tools {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

void say(const RunContext& ctx, const std::string& line) {
  if (ctx.log) *ctx.log << line << '\n' << std::flush;
}

std::string numbered(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu.csv", k);
  return buf;
}

json residual_report(const FamilySolution& fam, const ResidualPlan& plan) {
  const FamilyField field(fam);
  json out = json::array();
  for (double t : plan.times) {
    const double a = family_scale(fam, t);
    const double R = fam.profile.support_edge() ? plan.extent * a * *fam.profile.support_edge()
                                                : plan.radius;
    std::vector<double> radii;
    for (std::size_t i = 1; i <= plan.points; ++i) {
      radii.push_back(R * static_cast<double>(i) / static_cast<double>(plan.points));
    }
    json levels = json::array();
    json mass_ratios = json::array(), momentum_ratios = json::array();
    double prev_mass = 0.0, prev_mom = 0.0;
    for (int l = 0; l < plan.levels; ++l) {
      const double f = std::ldexp(1.0, -l);
      const ResidualNorms n = pde_residual(field, t, radii, {plan.dr * f, plan.dt * f});
      levels.push_back({{"dr", plan.dr * f},
                        {"dt", plan.dt * f},
                        {"mass", n.mass},
                        {"momentum", n.momentum},
                        {"points", n.points}});
      if (l > 0) {
        mass_ratios.push_back(n.mass > 0.0 ? json(prev_mass / n.mass) : json(nullptr));
        momentum_ratios.push_back(n.momentum > 0.0 ? json(prev_mom / n.momentum) : json(nullptr));
      }
      prev_mass = n.mass;
      prev_mom = n.momentum;
    }
    out.push_back({{"t", t},
                   {"a", a},
                   {"radius", R},
                   {"levels", levels},
                   {"mass_ratios", mass_ratios},
                   {"momentum_ratios", momentum_ratios}});
  }
  return out;
}

}  // namespace

CommandResult cmd_lane_emden(const ScenarioConfig& cfg, const fs::path& run_dir,
                             const RunContext& ctx) {
  const LaneEmdenJob job = lane_emden_job(cfg);
  const PolytropeProfile prof = solve_profile(job.spec, job.options);
  write_profile_csv(run_dir / "profile.csv", prof);

  json s;
  s["kind"] = std::string(to_string(job.spec.kind));
  s["n"] = job.spec.n;
  s["N"] = profile_dimension(job.spec);
  s["alpha"] = job.spec.alpha;
  s["mu"] = job.spec.mu;
  s["K"] = job.spec.K;
  s["g"] = job.spec.g;
  s["h"] = job.options.h;
  s["z_max"] = job.options.z_max;
  s["z_searched"] = prof.z_searched;
  const auto zero = refine_first_zero(prof);
  s["first_zero"] = zero ? json(zero->z) : json(nullptr);
  s["slope_at_zero"] = zero ? json(zero->dy) : json(nullptr);
  s["density_ratio"] = nullptr;
  if (zero && job.spec.kind == ProfileKind::classic) s["density_ratio"] = density_ratio(prof);
  if (zero) {
    s["note"] = "finite radius";
  } else if (job.spec.kind == ProfileKind::classic && job.spec.n >= 5.0) {
    s["note"] = "infinite radius";
  } else if (job.spec.kind == ProfileKind::isothermal2d) {
    s["note"] = "isothermal profile has no zero";
  } else {
    s["note"] = "no zero on the searched span";
  }
  write_json(run_dir / "summary.json", s);
  say(ctx, "first_zero = " + (zero ? format_double(zero->z) : std::string("null")) + " (" +
               s["note"].get<std::string>() + ")");
  return {kExitOk, {{"status", "completed"}, {"z_searched", prof.z_searched}}};
}

CommandResult cmd_family(const ScenarioConfig& cfg, const fs::path& run_dir,
                         const RunContext& ctx) {
  const FamilyJob job = family_job(cfg);
  const FamilySolution fam = make_family(job.params);
  write_trajectory_csv(run_dir / "trajectory.csv", fam.scale);

  const auto& p = job.params;
  const auto T = blowup_time(fam.scale);
  const auto Tq = collapse_time_by_quadrature(p.N, p.lambda, p.a0, p.a1);
  json r;
  r["kind"] = std::string(to_string(p.kind));
  r["N"] = p.N;
  r["gamma"] = fam.closure.gamma;
  r["K"] = p.K;
  r["g"] = p.g;
  r["lambda"] = p.lambda;
  r["mu"] = fam.mu;
  r["alpha"] = p.alpha;
  r["a0"] = p.a0;
  r["a1"] = p.a1;
  r["support_edge"] = optional_number(fam.profile.support_edge());
  r["blowup_time"] = optional_number(T);
  r["quadrature_blowup_time"] = optional_number(Tq);
  r["quadrature_delta"] = (T && Tq) ? json(std::abs(*T - *Tq)) : json(nullptr);
  r["first_integral"] = fam.scale.first_integral;
  r["max_drift"] = fam.scale.max_drift;
  r["max_drift_away_from_collapse"] = fam.scale.max_drift_away_from_collapse;
  r["t_last"] = fam.scale.t_last();
  for (double t : job.residual.times) {
    if (T && t + job.residual.dt >= *T) {
      throw InvalidInput("similarity.residual_times: t + dt must precede blowup at " +
                         format_double(*T));
    }
  }
  r["residuals"] = residual_report(fam, job.residual);
  write_json(run_dir / "residual.json", r);
  say(ctx, "blowup_time = " + (T ? format_double(*T) : std::string("null")));
  return {kExitOk, {{"status", "completed"}, {"blowup_time", optional_number(T)}}};
}

CommandResult cmd_evolve(const ScenarioConfig& cfg, const fs::path& run_dir,
                         const RunContext& ctx) {
  const EvolveJob job = evolve_job(cfg);
  std::size_t frame = 0;
  if (job.write_snapshots) fs::create_directories(run_dir / "snapshots");
  auto on_snapshot = [&](const Snapshot& s) {
    if (job.write_snapshots) write_snapshot_csv(run_dir / "snapshots" / numbered(frame), s.state);
    ++frame;
  };
  const EvolutionOutcome out = run_evolution(job, on_snapshot);
  const auto& res = out.result;

  write_diagnostics_csv(run_dir / "diagnostics.csv", out.diagnostics);
  write_snapshot_csv(run_dir / "final.csv", res.final.state);
  if (job.write_checkpoint) save_checkpoint(run_dir / "final.chk", res.final.state);

  json sim = {{"termination", std::string(to_string(res.termination))},
              {"detail", res.detail},
              {"t_final", res.final.state.t},
              {"steps", res.steps},
              {"snapshots", res.snapshots.size()},
              {"initial_max_density", res.initial_max_density},
              {"max_density_ratio", res.max_density_ratio},
              {"clamped_cells", res.clamped_cells},
              {"clamped_mass", res.clamped_mass},
              {"max_tv_ratio", res.max_tv_ratio},
              {"smooth_regime_ended", res.smooth_regime_ended}};
  json v = to_json(out.verdict);
  v["input"] = to_json(out.input);
  v["simulation"] = sim;
  if (out.input.sup_functional) v["epsilon_hat"] = out.input.g * out.input.M * out.input.M -
                                                   *out.input.sup_functional;
  v["stationary"] = out.stationary ? to_json(*out.stationary) : json(nullptr);
  v["hydrostatic_residual"] = optional_number(out.hydrostatic_residual);
  write_json(run_dir / "verdict.json", v);

  say(ctx, "termination " + std::string(to_string(res.termination)) + " at t = " +
               format_double(res.final.state.t) + ", verdict " +
               std::string(to_string(out.verdict.tag)));
  const int code =
      res.termination == Termination::support_hit_boundary ? kExitSupportHitBoundary : kExitOk;
  return {code, sim};
}

CommandResult cmd_classify(const ScenarioConfig& cfg, const fs::path& run_dir,
                           const RunContext& ctx) {
  const ClassifyJob job = classify_job(cfg);
  const BlowupVerdict verdict = classify_blowup(job.input);
  json v = to_json(verdict);
  v["input"] = to_json(job.input);
  write_json(run_dir / "verdict.json", v);
  say(ctx, std::string(to_string(verdict.tag)) + " " + std::string(to_string(verdict.outcome)));
  return {kExitOk, {{"status", "completed"}}};
}

CommandResult cmd_sweep(const ScenarioConfig& cfg, const fs::path& run_dir,
                        const RunContext& ctx) {
  const SweepJob job = sweep_job(cfg);
  const std::vector<SweepCell> cells = sweep_cells(job);
  std::vector<BlowupVerdict> verdicts(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      try {
        const ClassifyInput in = sweep_input(job, cells[k]);
        verdicts[k] = classify_blowup(in);
        char name[16];
        std::snprintf(name, sizeof name, "%03zu", k);
        const fs::path dir = run_dir / "cells" / name;
        fs::create_directories(dir);
        json v = to_json(verdicts[k]);
        v["input"] = to_json(in);
        write_json(dir / "verdict.json", v);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(ctx.threads, cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!errors[k].empty()) throw InvalidInput("sweep cell " + std::to_string(k) + ": " + errors[k]);
  }

  std::ofstream csv(run_dir / "sweep.csv");
  csv << "cell,N,gamma,critical,energy,E0,beta,theorem_tag,outcome,bound\n";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& c = cells[k];
    const ClassifyInput in = sweep_input(job, c);
    const auto& v = verdicts[k];
    csv << k << ',' << c.N << ',' << format_double(c.gamma) << ',' << (c.critical ? 1 : 0) << ','
        << to_string(c.energy) << ',' << format_double(in.E0) << ',' << format_double(c.beta)
        << ',' << to_string(v.tag) << ',' << to_string(v.outcome) << ','
        << (v.bound ? format_double(*v.bound) : std::string()) << '\n';
  }
  if (!csv) throw InvalidInput("cannot write sweep.csv");
  say(ctx, std::to_string(cells.size()) + " cells classified");
  return {kExitOk, {{"status", "completed"}, {"cells", cells.size()}}};
}

CommandResult cmd_verify(const ScenarioConfig& cfg, const fs::path& run_dir,
                         const RunContext& ctx) {
  const std::vector<int> only = verify_criteria(cfg);
  std::ofstream txt(run_dir / "acceptance.txt");
  const auto results = run_acceptance(only, [&](const CriterionResult& r) {
    const std::string line = format_result(r);
    txt << line << '\n' << std::flush;
    say(ctx, line);
  });
  json rows = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  write_json(run_dir / "acceptance.json", rows);
  return {all ? kExitOk : kExitNumericalFailure,
          {{"status", all ? "all criteria passed" : "criteria failed"}}};
}

int run_command(const ScenarioConfig& cfg, const RunContext& ctx) {
  using Body = CommandResult (*)(const ScenarioConfig&, const fs::path&, const RunContext&);
  Body body = nullptr;
  try {
    switch (cfg.command()) {
      case Command::lane_emden: lane_emden_job(cfg); body = cmd_lane_emden; break;
      case Command::family: family_job(cfg); body = cmd_family; break;
      case Command::evolve: evolve_job(cfg); body = cmd_evolve; break;
      case Command::classify: classify_job(cfg); body = cmd_classify; break;
      case Command::sweep: sweep_cells(sweep_job(cfg)); body = cmd_sweep; break;
      case Command::verify: verify_criteria(cfg); body = cmd_verify; break;
    }
  } catch (const InvalidInput& e) {
    say(ctx, std::string("invalid input: ") + e.what());
    return kExitInvalidInput;
  }

  fs::path dir;
  try {
    dir = prepare_run_dir(ctx.out_root, cfg.text("run", "name"));
  } catch (const std::exception& e) {
    say(ctx, std::string("invalid input: ") + e.what());
    return kExitInvalidInput;
  }
  RunManifest manifest(dir, cfg, ctx.seed);
  manifest.begin();

  int code = kExitOk;
  json termination;
  std::string status = "completed";
  try {
    CommandResult r = body(cfg, dir, ctx);
    code = r.exit_code;
    termination = r.termination;
    if (code != kExitOk) status = "completed with nonzero exit";
  } catch (const InvalidInput& e) {
    code = kExitInvalidInput;
    status = "failed";
    termination = {{"error", "invalid input"}, {"message", e.what()}};
  } catch (const NumericalFailure& e) {
    code = kExitNumericalFailure;
    status = "failed";
    termination = {{"error", "numerical failure"}, {"message", e.what()}};
  } catch (const SupportHitBoundary& e) {
    code = kExitSupportHitBoundary;
    status = "failed";
    termination = {{"error", "support hit boundary"}, {"message", e.what()}};
  }
  if (termination.contains("message")) {
    say(ctx, termination["error"].get<std::string>() + ": " +
                 termination["message"].get<std::string>());
  }
  manifest.finish(status, code, termination);
  return code;
}

}  // namespace eplab::tools
