#include "eplab_tools/jobs.hpp"

#include <cmath>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"

namespace eplab::tools {

namespace {

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw InvalidInput(key + ": " + what);
}

double positive(const ScenarioConfig& cfg, const std::string& s, const std::string& k) {
  const double v = cfg.number(s, k);
  require(v > 0.0, s + "." + k, "must be > 0");
  return v;
}

double nonnegative(const ScenarioConfig& cfg, const std::string& s, const std::string& k) {
  const double v = cfg.number(s, k);
  require(v >= 0.0, s + "." + k, "must be >= 0");
  return v;
}

long at_least(const ScenarioConfig& cfg, const std::string& s, const std::string& k, long lo) {
  const long v = cfg.integer(s, k);
  require(v >= lo, s + "." + k, "must be >= " + std::to_string(lo));
  return v;
}

template <class Parse>
auto parsed(const ScenarioConfig& cfg, const std::string& s, const std::string& k, Parse parse) {
  try {
    return parse(cfg.text(s, k));
  } catch (const InvalidInput& e) {
    throw InvalidInput(s + "." + k + ": " + e.what());
  }
}

FamilyParams family_params(const ScenarioConfig& cfg) {
  const std::string s = "similarity";
  FamilyParams p;
  p.kind = parsed(cfg, s, "kind", [](const std::string& v) { return parse_profile_kind(v); });
  require(p.kind != ProfileKind::classic, s + ".kind", "must be power or isothermal2d");
  p.N = static_cast<int>(cfg.integer(s, "N"));
  if (p.kind == ProfileKind::power) {
    require(p.N >= 3, s + ".N", "power family requires N >= 3");
  } else {
    require(p.N == 2, s + ".N", "isothermal2d family requires N = 2");
  }
  p.K = positive(cfg, s, "K");
  p.g = positive(cfg, s, "g");
  p.lambda = cfg.number(s, "lambda");
  p.mu = cfg.maybe_number(s, "mu");
  if (p.mu) {
    const double expected = family_mu(p.kind, p.N, p.K, p.lambda);
    require(std::abs(*p.mu - expected) <= 1e-12 * std::max(1.0, std::abs(expected)), s + ".mu",
            "inconsistent with lambda and K (expected " + std::to_string(expected) + ")");
  }
  p.alpha = cfg.number(s, "alpha");
  if (p.kind == ProfileKind::power) require(p.alpha > 0.0, s + ".alpha", "must be > 0");
  p.a0 = positive(cfg, s, "a0");
  p.a1 = cfg.number(s, "a1");
  p.t_end = positive(cfg, s, "t_end");
  p.dt = positive(cfg, s, "dt");
  p.profile_options.z_max = positive(cfg, s, "z_max");
  p.profile_options.h = positive(cfg, s, "h");
  require(p.profile_options.h < p.profile_options.z_max, s + ".h", "must be below z_max");
  p.profile_options.store_every = static_cast<std::size_t>(at_least(cfg, s, "store_every", 1));
  return p;
}

}  // namespace

std::string_view to_string(InitialProfile p) {
  switch (p) {
    case InitialProfile::polytrope: return "polytrope";
    case InitialProfile::stationary65: return "stationary65";
    case InitialProfile::family: return "family";
    case InitialProfile::concentrated: return "concentrated";
    case InitialProfile::uniform: return "uniform";
    case InitialProfile::checkpoint: return "checkpoint";
  }
  return "unknown";
}

InitialProfile parse_initial_profile(std::string_view name) {
  for (auto p : {InitialProfile::polytrope, InitialProfile::stationary65, InitialProfile::family,
                 InitialProfile::concentrated, InitialProfile::uniform,
                 InitialProfile::checkpoint}) {
    if (to_string(p) == name) return p;
  }
  throw InvalidInput("unknown initial profile '" + std::string(name) + "'");
}

std::string_view to_string(EnergySign s) {
  switch (s) {
    case EnergySign::negative: return "negative";
    case EnergySign::zero: return "zero";
    case EnergySign::positive: return "positive";
  }
  return "unknown";
}

LaneEmdenJob lane_emden_job(const ScenarioConfig& cfg) {
  const std::string s = "polytrope";
  LaneEmdenJob job;
  auto& spec = job.spec;
  spec.kind = parsed(cfg, s, "kind", [](const std::string& v) { return parse_profile_kind(v); });
  spec.n = cfg.number(s, "n");
  spec.alpha = cfg.number(s, "alpha");
  spec.mu = cfg.number(s, "mu");
  spec.K = positive(cfg, s, "K");
  spec.g = positive(cfg, s, "g");
  spec.dimension = static_cast<int>(cfg.integer(s, "N"));
  switch (spec.kind) {
    case ProfileKind::classic:
      require(spec.n >= 0.0, s + ".n", "must be >= 0");
      require(spec.alpha > 0.0, s + ".alpha", "must be > 0");
      spec.dimension = 3;
      break;
    case ProfileKind::power:
      require(spec.dimension >= 3, s + ".N", "power kind requires N >= 3");
      require(spec.alpha > 0.0, s + ".alpha", "must be > 0");
      break;
    case ProfileKind::isothermal2d:
      spec.dimension = 2;
      break;
  }
  job.options.z_max = positive(cfg, s, "z_max");
  job.options.h = positive(cfg, s, "h");
  require(job.options.h < job.options.z_max, s + ".h", "must be below z_max");
  job.options.store_every = static_cast<std::size_t>(at_least(cfg, s, "store_every", 1));
  return job;
}

FamilyJob family_job(const ScenarioConfig& cfg) {
  const std::string s = "similarity";
  FamilyJob job;
  job.params = family_params(cfg);
  auto& r = job.residual;
  r.times = cfg.numbers(s, "residual_times");
  for (double t : r.times) require(t >= 0.0, s + ".residual_times", "times must be >= 0");
  r.dr = positive(cfg, s, "residual_dr");
  r.dt = positive(cfg, s, "residual_dt");
  r.levels = static_cast<int>(at_least(cfg, s, "residual_levels", 1));
  r.points = static_cast<std::size_t>(at_least(cfg, s, "residual_points", 4));
  r.extent = positive(cfg, s, "residual_extent");
  require(r.extent < 1.0, s + ".residual_extent", "must be < 1");
  r.radius = positive(cfg, s, "residual_radius");
  for (double t : r.times) {
    require(t - r.dt >= 0.0, s + ".residual_dt", "t - dt must be >= 0 at every residual time");
    require(t + r.dt <= job.params.t_end, s + ".residual_times",
            "t + dt must not exceed t_end");
  }
  return job;
}

EvolveJob evolve_job(const ScenarioConfig& cfg) {
  const std::string s = "hydro";
  EvolveJob job;
  auto& ph = job.phys;
  ph.N = static_cast<int>(at_least(cfg, s, "N", 2));
  ph.gamma = cfg.number(s, "gamma");
  require(ph.gamma >= 1.0, s + ".gamma", "must be >= 1");
  ph.K = positive(cfg, s, "K");
  ph.g = positive(cfg, s, "g");
  ph.beta = nonnegative(cfg, s, "beta");
  job.r_max = positive(cfg, s, "r_max");
  job.cells = static_cast<std::size_t>(at_least(cfg, s, "cells", 4));

  auto& ev = job.evolve;
  ev.t_end = positive(cfg, s, "t_end");
  ev.snapshot_every = positive(cfg, s, "snapshot_every");
  ev.hydro.reconstruction = parsed(cfg, s, "reconstruction",
                                   [](const std::string& v) { return parse_reconstruction(v); });
  ev.hydro.limiter =
      parsed(cfg, s, "limiter", [](const std::string& v) { return parse_limiter(v); });
  ev.hydro.gravity = cfg.flag(s, "gravity");
  ev.hydro.pressure = cfg.flag(s, "pressure");
  ev.hydro.cfl = positive(cfg, s, "cfl");
  require(ev.hydro.cfl <= 1.0, s + ".cfl", "must be <= 1");
  ev.collapse_factor = positive(cfg, s, "collapse_factor");
  require(ev.collapse_factor > 1.0, s + ".collapse_factor", "must be > 1");
  ev.tv_growth_factor = positive(cfg, s, "tv_growth_factor");
  ev.max_steps = static_cast<std::size_t>(at_least(cfg, s, "max_steps", 1));

  const std::string i = "initial";
  auto& in = job.initial;
  in.profile =
      parsed(cfg, i, "profile", [](const std::string& v) { return parse_initial_profile(v); });
  in.rho_c = positive(cfg, i, "rho_c");
  in.radius = positive(cfg, i, "radius");
  in.core_radius = positive(cfg, i, "core_radius");
  in.A = positive(cfg, i, "A");
  in.truncate = positive(cfg, i, "truncate");
  in.velocity_slope = cfg.number(i, "velocity_slope");
  in.checkpoint = cfg.text(i, "checkpoint");
  switch (in.profile) {
    case InitialProfile::polytrope:
      require(ph.N == 3, s + ".N", "polytrope initial data requires N = 3");
      require(ph.gamma > 1.2, s + ".gamma", "polytrope initial data requires gamma > 6/5");
      break;
    case InitialProfile::stationary65:
      require(ph.N == 3, s + ".N", "stationary65 initial data requires N = 3");
      require(std::abs(ph.gamma - 1.2) <= 1e-12, s + ".gamma",
              "stationary65 initial data requires gamma = 6/5");
      require(ph.g == kStationary65Coupling, s + ".g",
              "stationary65 profile is in balance only for g = 3");
      break;
    case InitialProfile::family: {
      in.family = family_params(cfg);
      const auto& f = in.family;
      require(ph.N == f.N, s + ".N", "must equal similarity.N for family initial data");
      require(std::abs(ph.gamma - family_gamma(f.kind, f.N)) <= 1e-12, s + ".gamma",
              "must equal the family exponent " + std::to_string(family_gamma(f.kind, f.N)));
      require(ph.K == f.K, s + ".K", "must equal similarity.K for family initial data");
      require(ph.g == f.g, s + ".g", "must equal similarity.g for family initial data");
      require(ph.beta == 0.0, s + ".beta", "family initial data is undamped");
      break;
    }
    case InitialProfile::checkpoint:
      require(!in.checkpoint.empty(), i + ".checkpoint", "path required");
      break;
    case InitialProfile::concentrated:
    case InitialProfile::uniform:
      break;
  }

  job.epsilon_margin = nonnegative(cfg, "diagnostics", "epsilon_margin");
  job.domain_measure = cfg.maybe_number("diagnostics", "domain_measure");
  if (job.domain_measure) {
    require(*job.domain_measure > 0.0, "diagnostics.domain_measure", "must be > 0");
  }
  job.write_snapshots = cfg.flag("output", "snapshots");
  job.write_checkpoint = cfg.flag("output", "checkpoint");
  return job;
}

ClassifyJob classify_job(const ScenarioConfig& cfg) {
  const std::string s = "diagnostics";
  ClassifyJob job;
  auto& in = job.input;
  in.N = static_cast<int>(at_least(cfg, s, "N", 2));
  in.gamma = cfg.number(s, "gamma");
  require(in.gamma > 1.0, s + ".gamma", "must be > 1");
  in.beta = nonnegative(cfg, s, "beta");
  in.E0 = cfg.number(s, "E0");
  in.M = positive(cfg, s, "M");
  in.K = positive(cfg, s, "K");
  in.g = positive(cfg, s, "g");
  in.energy_scale = nonnegative(cfg, s, "energy_scale");
  in.sup_functional = cfg.maybe_number(s, "sup_functional");
  in.epsilon = cfg.maybe_number(s, "epsilon");
  if (in.N == 2 && in.epsilon) require(*in.epsilon > 0.0, s + ".epsilon", "must be > 0");
  if (in.N == 2 && !in.epsilon) {
    require(in.sup_functional.has_value(), s + ".sup_functional",
            "N = 2 needs sup_functional or epsilon");
  }
  in.epsilon_margin = nonnegative(cfg, s, "epsilon_margin");
  in.domain_measure = cfg.maybe_number(s, "domain_measure");
  if (in.domain_measure) require(*in.domain_measure > 0.0, s + ".domain_measure", "must be > 0");
  in.H0 = cfg.maybe_number(s, "H0");
  in.Hdot0 = cfg.maybe_number(s, "Hdot0");
  if (in.H0) require(*in.H0 >= 0.0, s + ".H0", "must be >= 0");
  return job;
}

SweepJob sweep_job(const ScenarioConfig& cfg) {
  const std::string s = "sweep";
  SweepJob job;
  for (double n : cfg.numbers(s, "N")) {
    require(n == std::floor(n) && n >= 3.0, s + ".N", "entries must be integers >= 3");
    job.dimensions.push_back(static_cast<int>(n));
  }
  job.betas = cfg.numbers(s, "beta");
  for (double b : job.betas) require(b >= 0.0, s + ".beta", "entries must be >= 0");
  for (const auto& item : cfg.texts(s, "cases")) {
    const auto colon = item.find(':');
    require(colon != std::string::npos, s + ".cases", "entries must be gamma:sign, got '" + item + "'");
    const std::string g = item.substr(0, colon), sign = item.substr(colon + 1);
    SweepCase c;
    if (g != "critical") {
      try {
        std::size_t used = 0;
        c.gamma = std::stod(g, &used);
        require(used == g.size(), s + ".cases", "bad gamma '" + g + "'");
      } catch (const std::logic_error&) {
        throw InvalidInput(s + ".cases: bad gamma '" + g + "'");
      }
      require(*c.gamma > 1.0, s + ".cases", "gamma must be > 1");
    }
    if (sign == "negative") {
      c.energy = EnergySign::negative;
    } else if (sign == "zero") {
      c.energy = EnergySign::zero;
    } else if (sign == "positive") {
      c.energy = EnergySign::positive;
    } else {
      throw InvalidInput(s + ".cases: energy sign must be negative, zero or positive, got '" +
                         sign + "'");
    }
    job.cases.push_back(c);
  }
  job.energy_magnitude = positive(cfg, s, "energy_magnitude");
  job.M = positive(cfg, s, "M");
  job.K = positive(cfg, s, "K");
  job.g = positive(cfg, s, "g");
  job.domain_measure = positive(cfg, s, "domain_measure");
  job.H0 = nonnegative(cfg, s, "H0");
  job.Hdot0 = cfg.number(s, "Hdot0");
  if (job.dimensions.empty() || job.betas.empty() || job.cases.empty()) {
    throw InvalidInput("sweep: empty grid (N, beta and cases must all be non-empty)");
  }
  return job;
}

std::vector<int> verify_criteria(const ScenarioConfig& cfg) {
  std::vector<int> out;
  for (double c : cfg.numbers("verify", "criteria")) {
    require(c == std::floor(c) && c >= 1.0 && c <= 11.0, "verify.criteria",
            "entries must be integers in 1..11");
    out.push_back(static_cast<int>(c));
  }
  return out;
}

std::vector<SweepCell> sweep_cells(const SweepJob& job) {
  if (job.dimensions.empty() || job.betas.empty() || job.cases.empty()) {
    throw InvalidInput("sweep: empty grid");
  }
  std::vector<SweepCell> cells;
  for (int N : job.dimensions) {
    for (double beta : job.betas) {
      for (const auto& c : job.cases) {
        SweepCell cell;
        cell.N = N;
        cell.beta = beta;
        cell.critical = !c.gamma.has_value();
        cell.gamma = c.gamma.value_or(critical_gamma(N));
        cell.energy = c.energy;
        cells.push_back(cell);
      }
    }
  }
  return cells;
}

ClassifyInput sweep_input(const SweepJob& job, const SweepCell& cell) {
  ClassifyInput in;
  in.N = cell.N;
  in.gamma = cell.gamma;
  in.beta = cell.beta;
  switch (cell.energy) {
    case EnergySign::negative: in.E0 = -job.energy_magnitude; break;
    case EnergySign::zero: in.E0 = 0.0; break;
    case EnergySign::positive: in.E0 = job.energy_magnitude; break;
  }
  in.M = job.M;
  in.K = job.K;
  in.g = job.g;
  in.energy_scale = job.energy_magnitude;
  in.domain_measure = job.domain_measure;
  in.H0 = job.H0;
  in.Hdot0 = job.Hdot0;
  return in;
}

}  // namespace eplab::tools
