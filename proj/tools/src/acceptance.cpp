#include "eplab_tools/acceptance.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "eplab/classify.hpp"
#include "eplab/diagnostics.hpp"
#include "eplab/family.hpp"
#include "eplab/hydro.hpp"
#include "eplab/polytrope.hpp"
#include "eplab/scale_factor.hpp"
#include "eplab_tools/config.hpp"
#include "eplab_tools/jobs.hpp"
#include "eplab_tools/pipeline.hpp"
#include "eplab_tools/scenarios.hpp"

namespace eplab::tools {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

bool within(double ratio, double target, double rel) {
  return std::abs(ratio - target) <= rel * target;
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& text) {
    ok = ok && cond;
    if (detail.tellp() > 0) detail << "; ";
    detail << text << (cond ? "" : " [x]");
  }
};

// Closed forms of the Lane-Emden solutions with n = 0, 1, 5.
double lane_emden_exact(double n, double z) {
  if (n == 0.0) return 1.0 - z * z / 6.0;
  if (n == 1.0) return z == 0.0 ? 1.0 : std::sin(z) / z;
  return 1.0 / std::sqrt(1.0 + z * z / 3.0);
}

CriterionResult lane_emden_agreement() {
  Check c;
  for (double n : {0.0, 1.0, 5.0}) {
    const auto prof = solve_lane_emden(n, 1.0, IntegrationOptions{n == 5.0 ? 10.0 : 20.0, 1e-4, 1});
    const double z_end = std::min(prof.first_zero.value_or(10.0), 10.0);
    double err = 0.0;
    for (const auto& s : prof.samples) {
      if (s.z > z_end) break;
      err = std::max(err, std::abs(s.y - lane_emden_exact(n, s.z)));
    }
    c.require(err <= 1e-8, "n=" + std::to_string(static_cast<int>(n)) + " max err " + sci(err));
  }
  const auto z0 = first_zero(solve_lane_emden(0.0, 1.0, 10.0, 1e-4));
  const auto z1 = first_zero(solve_lane_emden(1.0, 1.0, 10.0, 1e-4));
  const double e0 = z0 ? std::abs(*z0 - std::sqrt(6.0)) : INFINITY;
  const double e1 = z1 ? std::abs(*z1 - kPi) : INFINITY;
  c.require(e0 <= 1e-8, "|z0(n=0) - sqrt6| " + sci(e0));
  c.require(e1 <= 1e-8, "|z0(n=1) - pi| " + sci(e1));
  const auto far = solve_lane_emden(5.0, 1.0, IntegrationOptions{1000.0, 1e-4, 10000});
  c.require(!far.first_zero && far.z_searched >= 1000.0 - 1e-4,
            "n=5 zero-free to z=" + sci(far.z_searched));
  return {1, "Lane-Emden analytic agreement", c.ok, c.detail.str()};
}

CriterionResult density_ratio_check() {
  Check c;
  const double r0 = density_ratio(solve_lane_emden(0.0, 1.0, 10.0, 1e-4));
  const double r1 = density_ratio(solve_lane_emden(1.0, 1.0, 10.0, 1e-4));
  c.require(std::abs(r0 - 1.0) <= 1e-6, "n=0 ratio err " + sci(std::abs(r0 - 1.0)));
  c.require(std::abs(r1 - 3.0 / (kPi * kPi)) <= 1e-6,
            "n=1 ratio err " + sci(std::abs(r1 - 3.0 / (kPi * kPi))));
  return {2, "core/mean density ratio", c.ok, c.detail.str()};
}

// Collapse times from the first integral, evaluated in closed form.
struct ScaleCase {
  int N;
  double lambda, a0, a1, T;
};

std::vector<ScaleCase> scale_oracles() {
  // N = 4: e = a1^2/2 - lambda/(2 a0^2), dt = a da / sqrt(2 e a^2 + lambda).
  auto n4 = [](double lambda, double a0, double a1) {
    const double e = 0.5 * a1 * a1 - lambda / (2.0 * a0 * a0);
    const double inward = (std::sqrt(lambda) - std::sqrt(2.0 * e * a0 * a0 + lambda)) / (-2.0 * e);
    if (a1 <= 0.0) return inward;
    return inward + 2.0 * std::sqrt(2.0 * e * a0 * a0 + lambda) / (-2.0 * e);
  };
  return {
      {2, 1.0, 1.0, 0.0, std::sqrt(kPi / 2.0)},
      {2, 0.5, 2.0, 0.0, 2.0 * std::sqrt(kPi / (2.0 * 0.5))},
      {3, 1.0, 1.0, 0.0, kPi / (2.0 * std::sqrt(2.0))},
      {3, 2.0, 1.5, 0.0, kPi / (2.0 * std::sqrt(2.0 * 2.0)) * std::pow(1.5, 1.5)},
      {4, 1.0, 1.0, -0.5, n4(1.0, 1.0, -0.5)},
      {4, 1.0, 1.0, 0.5, n4(1.0, 1.0, 0.5)},
  };
}

CriterionResult scale_factor_blowup() {
  Check c;
  for (auto [N, a0, a1] : {std::tuple{3, 1.0, -1.0}, std::tuple{2, 2.0, -0.5},
                           std::tuple{5, 1.5, -0.25}}) {
    const auto traj = integrate_scale(N, 0.0, a0, a1, 20.0, 1e-3);
    const auto T = blowup_time(traj);
    const double err = T ? std::abs(*T - (-a0 / a1)) : INFINITY;
    double dev = 0.0;
    for (const auto& s : traj.samples) dev = std::max(dev, std::abs(s.a - (a0 + a1 * s.t)));
    c.require(err <= 1e-10 && dev <= 1e-10,
              "lambda=0 N=" + std::to_string(N) + " |T+a0/a1| " + sci(err) + " path dev " + sci(dev));
  }
  double worst_T = 0.0, worst_drift = 0.0;
  for (const auto& k : scale_oracles()) {
    const auto traj = integrate_scale(k.N, k.lambda, k.a0, k.a1, 10.0, 1e-3);
    const auto T = blowup_time(traj);
    worst_T = std::max(worst_T, T ? std::abs(*T - k.T) : INFINITY);
    worst_drift = std::max(worst_drift, traj.max_drift_away_from_collapse);
  }
  c.require(worst_T <= 1e-6, "lambda>0 max |T - T_quad| " + sci(worst_T));
  c.require(worst_drift <= 1e-8, "first-integral drift " + sci(worst_drift));
  return {3, "scale-factor blowup", c.ok, c.detail.str()};
}

struct FamilyCase {
  const char* label;
  FamilyParams params;
  double t;
  std::optional<double> radius;
};

CriterionResult family_residuals() {
  Check c;
  FamilyParams power;
  power.kind = ProfileKind::power;
  power.N = 3;
  power.K = kPi;
  power.lambda = 0.1;
  power.alpha = 2.0;
  power.a1 = -0.2;
  power.t_end = 1.0;
  FamilyParams iso;
  iso.kind = ProfileKind::isothermal2d;
  iso.N = 2;
  iso.K = 2.0 * kPi;
  iso.lambda = 0.0;
  iso.alpha = 0.0;
  iso.a1 = -0.3;
  iso.t_end = 1.0;
  iso.profile_options.z_max = 30.0;
  for (const auto& fc : {FamilyCase{"N=3", power, 0.3, std::nullopt},
                         FamilyCase{"2D", iso, 0.3, 10.0}}) {
    const FamilySolution fam = make_family(fc.params);
    const FamilyField field(fam);
    const double R = fc.radius.value_or(0.9 * family_scale(fam, fc.t) * *fam.profile.support_edge());
    std::vector<double> radii;
    for (int i = 1; i <= 200; ++i) radii.push_back(R * i / 200.0);
    std::vector<ResidualNorms> norms;
    for (double h : {0.04, 0.02, 0.01, 0.005}) norms.push_back(pde_residual(field, fc.t, radii, {h, h}));
    std::ostringstream ratios;
    bool ok = true;
    for (std::size_t k = 1; k < norms.size(); ++k) {
      const double rm = norms[k - 1].mass / norms[k].mass;
      const double rp = norms[k - 1].momentum / norms[k].momentum;
      ok = ok && within(rm, 4.0, 0.3) && within(rp, 4.0, 0.3);
      char buf[48];
      std::snprintf(buf, sizeof buf, "%s%.2f/%.2f", k > 1 ? " " : "", rm, rp);
      ratios << buf;
    }
    c.require(ok, std::string(fc.label) + " mass/momentum ratios " + ratios.str());
  }
  return {4, "exact-family residual convergence", c.ok, c.detail.str()};
}

Physics stationary65_physics() {
  Physics ph;
  ph.N = 3;
  ph.gamma = 1.2;
  ph.K = 2.0 * kPi / 3.0;
  ph.g = kStationary65Coupling;
  return ph;
}

CriterionResult hydrostatic_oracle() {
  Check c;
  std::vector<double> res;
  double scale = 0.0;
  for (std::size_t cells : {1024, 2048, 4096}) {
    const RadialState st = stationary65_state(stationary65_physics(), 1.0, 50.0, 50.0, cells);
    res.push_back(hydrostatic_residual(st));
    scale = pressure_gradient_scale(st);
  }
  const double q1 = res[0] / res[1], q2 = res[1] / res[2];
  c.require(within(q1, 4.0, 0.3) && within(q2, 4.0, 0.3),
            "refinement ratios " + sci(q1) + ", " + sci(q2));
  c.require(res[2] <= 1e-3 * scale, "residual/scale at 4096 " + sci(res[2] / scale));
  return {5, "gamma=6/5 hydrostatic oracle", c.ok, c.detail.str()};
}

RadialState stationary_2d_state(double r_max, std::size_t cells) {
  const ProfileInterpolant prof(solve_generalized_profile(
      ProfileKind::isothermal2d, 2, 2.0 * kPi, 0.0, 0.0, IntegrationOptions{r_max + 1.0, 1e-3, 1}));
  Physics ph;
  ph.N = 2;
  ph.gamma = 1.0;
  ph.K = 2.0 * kPi;
  ph.g = 1.0;
  RadialState st = make_state(ph, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) st.rho[i] = prof.shape(st.grid.center(i));
  st.reset_floor();
  return st;
}

CriterionResult stationary_identities_check() {
  Check c;
  const auto r3 = stationary_identities(stationary65_state(stationary65_physics(), 1.0, 50.0, 50.0, 4096));
  c.require(r3.mismatch <= 1e-2, "N=3 gamma=6/5 mismatch " + sci(r3.mismatch));
  const auto r2 = stationary_identities(stationary_2d_state(200.0, 16384));
  c.require(r2.mismatch <= 1e-2, "2D int P vs g M^2/4 mismatch " + sci(r2.mismatch));
  return {6, "stationary identities", c.ok, c.detail.str()};
}

// Lane-Emden n = 3/2 star (rho_c = 1, R = 1) contracting homologously.
struct StarRun {
  double drift = 0.0;
  double max_increase = 0.0;
  double E0 = 0.0;
  double virial_error = 0.0;
  double seconds = 0.0;
};

StarRun star_run(std::size_t cells, double beta) {
  const double gamma = 5.0 / 3.0;
  ScenarioConfig cfg(Command::evolve);
  const double K = polytrope_constant_for_radius(gamma, 1.0, 1.0);
  cfg.set("hydro.N", "3");
  cfg.set("hydro.gamma", format_double(gamma));
  cfg.set("hydro.K", format_double(K));
  cfg.set("hydro.beta", format_double(beta));
  cfg.set("hydro.r_max", "2");
  cfg.set("hydro.cells", std::to_string(cells));
  cfg.set("initial.profile", "polytrope");
  cfg.set("initial.velocity_slope", "-0.2");
  EvolveJob job = evolve_job(cfg);
  const double M = total_mass(initial_state(job));
  const double t_dyn = std::sqrt(1.0 / (job.phys.g * M));
  job.evolve.t_end = t_dyn;
  job.evolve.snapshot_every = t_dyn / 50.0;

  const auto t0 = std::chrono::steady_clock::now();
  const EvolutionOutcome out = run_evolution(job);
  StarRun r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& snaps = out.result.snapshots;
  r.E0 = snaps.front().energy.total;
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    r.drift = std::max(r.drift, std::abs(snaps[k].energy.total - r.E0) / std::abs(r.E0));
    if (k > 0) r.max_increase = std::max(r.max_increase,
                                         snaps[k].energy.total - snaps[k - 1].energy.total);
  }
  for (std::size_t k = 1; k + 1 < snaps.size(); ++k) {
    const auto& v = out.diagnostics[k].virial;
    r.virial_error = std::max(r.virial_error, std::abs(v.Hddot_measured - v.Hddot_formula) /
                                                  std::max(1.0, std::abs(v.Hddot_formula)));
  }
  return r;
}

const std::map<std::size_t, StarRun>& undamped_star_runs() {
  static const std::map<std::size_t, StarRun> runs = [] {
    std::map<std::size_t, StarRun> m;
    for (std::size_t cells : {1024, 2048, 4096}) m[cells] = star_run(cells, 0.0);
    return m;
  }();
  return runs;
}

CriterionResult energy_law() {
  Check c;
  const auto& runs = undamped_star_runs();
  const double d1 = runs.at(1024).drift, d2 = runs.at(2048).drift, d4 = runs.at(4096).drift;
  c.require(d2 <= 5e-3, "beta=0 drift at 2048 " + sci(d2));
  c.require(d4 < d2 && d2 < d1, "drift 1024/2048/4096 " + sci(d1) + "/" + sci(d2) + "/" + sci(d4));
  const StarRun damped = star_run(2048, 1.0);
  c.require(damped.max_increase <= 1e-12 * std::abs(damped.E0),
            "beta=1 largest snapshot-to-snapshot increase " + sci(damped.max_increase));
  return {7, "energy law", c.ok, c.detail.str()};
}

// H'' measured from exact-family states sampled every 1e-3.
double family_virial_error(const FamilyParams& p, double t_start) {
  const FamilySolution fam = make_family(p);
  const double Z = *fam.profile.support_edge();
  double a_max = 0.0;
  const int samples = 21;
  for (int k = 0; k < samples; ++k) a_max = std::max(a_max, family_scale(fam, t_start + 1e-3 * k));
  std::vector<VirialSample> series;
  for (int k = 0; k < samples; ++k) {
    series.push_back(virial_sample(family_state(fam, t_start + 1e-3 * k, 1.02 * a_max * Z, 4096)));
  }
  series = virial_series(std::move(series));
  double err = 0.0;
  for (std::size_t k = 1; k + 1 < series.size(); ++k) {
    err = std::max(err, std::abs(series[k].Hddot_measured - series[k].Hddot_formula) /
                            std::max(1.0, std::abs(series[k].Hddot_formula)));
  }
  return err;
}

CriterionResult virial_identity() {
  Check c;
  const auto& runs = undamped_star_runs();
  const double v1 = runs.at(1024).virial_error, v2 = runs.at(2048).virial_error,
               v4 = runs.at(4096).virial_error;
  c.require(v2 <= 0.05, "hydro virial error at 2048 " + sci(v2));
  c.require(v4 < v2 && v2 < v1, "1024/2048/4096 " + sci(v1) + "/" + sci(v2) + "/" + sci(v4));

  FamilyParams collapsing;
  collapsing.kind = ProfileKind::power;
  collapsing.N = 3;
  collapsing.K = kPi;
  collapsing.lambda = 0.1;
  collapsing.alpha = 2.0;
  collapsing.a1 = -0.2;
  collapsing.t_end = 1.0;
  FamilyParams coasting = collapsing;
  coasting.lambda = 0.0;
  coasting.a1 = 0.3;
  const double f1 = family_virial_error(collapsing, 0.3);
  const double f2 = family_virial_error(coasting, 0.3);
  c.require(std::max(f1, f2) <= 1e-4, "exact families " + sci(f1) + ", " + sci(f2));

  const RadialState st = stationary_2d_state(200.0, 16384);
  const double M = total_mass(st);
  const double Hdd = virial_sample(st).Hddot_formula;
  const double rel = std::abs(Hdd) / (st.phys.g * M * M);
  c.require(rel <= 1e-3, "2D stationary |H''|/(g M^2) " + sci(rel));
  return {8, "virial identity", c.ok, c.detail.str()};
}

// Expected verdicts for the default 40-cell sweep, written out by hand:
// rows N = 3..6, each with beta = 0 then beta = 0.5, each over
// (1.2, E<0), (crit, E<0), (1.2, E=0), (crit, E=0), (crit, E>0).
const std::vector<std::string>& expected_sweep() {
  static const std::vector<std::string> t = {
      // N = 3
      "inconclusive", "inconclusive", "inconclusive", "inconclusive", "Thm2-expansion",
      "inconclusive", "inconclusive", "inconclusive", "inconclusive", "inconclusive",
      // N = 4
      "Thm2-2a", "Remark-critical", "Thm2-2b", "inconclusive", "Thm2-expansion",
      "Thm3-1", "Remark-critical", "Thm3-2", "inconclusive", "inconclusive",
      // N = 5
      "Thm2-2a", "Remark-critical", "Thm2-2b", "inconclusive", "inconclusive",
      "Thm3-1", "Remark-critical", "Thm3-2", "inconclusive", "inconclusive",
      // N = 6
      "Thm2-2a", "Remark-critical", "Thm2-2b", "inconclusive", "inconclusive",
      "Thm3-1", "Remark-critical", "Thm3-2", "inconclusive", "inconclusive",
  };
  return t;
}

CriterionResult classification_sweep() {
  Check c;
  const SweepJob job = sweep_job(ScenarioConfig(Command::sweep));
  const auto cells = sweep_cells(job);
  const auto& want = expected_sweep();
  c.require(cells.size() == want.size(), std::to_string(cells.size()) + " cells");
  std::size_t mismatches = 0;
  std::string first;
  bool bounds_ok = true;
  for (std::size_t k = 0; k < std::min(cells.size(), want.size()); ++k) {
    const auto v = classify_blowup(sweep_input(job, cells[k]));
    const std::string tag(to_string(v.tag));
    if (tag != want[k]) {
      if (mismatches++ == 0) first = " (cell " + std::to_string(k) + ": " + tag + " vs " + want[k] + ")";
    }
    const bool blowup = v.outcome == Outcome::finite_time_blowup;
    if (blowup && !(v.bound && *v.bound > 0.0)) bounds_ok = false;
    if (v.tag == TheoremTag::thm2_expansion) {
      const double expect = std::sqrt((cells[k].N - 2.0) * job.energy_magnitude / job.M);
      if (!(v.bound && std::abs(*v.bound - expect) <= 1e-12 * expect)) bounds_ok = false;
    }
    if ((v.tag == TheoremTag::inconclusive) != (v.outcome == Outcome::inconclusive)) bounds_ok = false;
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " verdict mismatches" + first);
  c.require(bounds_ok, "time bounds and expansion rates present");
  return {9, "theorem-hypothesis classification", c.ok, c.detail.str()};
}

CriterionResult theorem1_end_to_end() {
  Check c;
  ScenarioConfig cfg(Command::evolve);
  cfg.set("hydro.N", "2");
  cfg.set("hydro.gamma", "2");
  cfg.set("hydro.K", "1e-4");
  cfg.set("hydro.r_max", "12");
  cfg.set("hydro.cells", "4096");
  cfg.set("hydro.t_end", "10");
  cfg.set("hydro.snapshot_every", "0.01");
  cfg.set("initial.profile", "concentrated");
  cfg.set("initial.rho_c", format_double(1.0 / kPi));
  cfg.set("initial.core_radius", "1");
  cfg.set("initial.truncate", "10");
  const EvolutionOutcome out = run_evolution(evolve_job(cfg));
  const auto& in = out.input;
  const double eps = in.g * in.M * in.M - *in.sup_functional;
  c.require(eps > 0.0, "eps_hat " + sci(eps));
  c.require(out.verdict.tag == TheoremTag::thm1_2d,
            "verdict " + std::string(to_string(out.verdict.tag)));
  // Positive root of H0 + H1 t - (eps/2) t^2.
  const double H0 = *in.H0, H1 = *in.Hdot0;
  const double root = (H1 + std::sqrt(H1 * H1 + 2.0 * eps * H0)) / eps;
  const double T = out.verdict.bound.value_or(NAN);
  c.require(std::abs(T - root) <= 1e-10, "T_bound " + sci(T) + " root err " + sci(std::abs(T - root)));
  const bool fired = out.result.termination == Termination::collapse_indicator;
  const double tc = out.result.final.state.t;
  c.require(fired && tc <= 1.25 * T, "collapse indicator at t=" + sci(tc));
  return {10, "2D finite-time blowup end to end", c.ok, c.detail.str()};
}

// Direct 2D quadrature of (g/2) int int rho(x) rho(y) ln|x - y| dx dy for a
// density that is constant on two annuli.
double direct_two_ring_energy(double g) {
  struct Ring {
    double a, b, rho;
  };
  const std::vector<Ring> rings = {{0.5, 1.0, 1.0}, {1.5, 2.0, 2.0}};
  boost::math::quadrature::tanh_sinh<double> ts;
  // angular average: int_0^{2pi} ln|r - s e^{i theta}| d theta, by symmetry 2 int_0^pi
  auto angular = [&](double r, double s) {
    auto f = [&](double th) {
      const double d2 = r * r + s * s - 2.0 * r * s * std::cos(th);
      return 0.5 * std::log(std::max(d2, 1e-300));
    };
    return 2.0 * ts.integrate(f, 0.0, kPi);
  };
  double total = 0.0;
  for (const auto& A : rings) {
    for (const auto& B : rings) {
      auto outer = [&](double r) {
        auto inner = [&](double s) { return s * angular(r, s); };
        double v = 0.0;
        if (r > B.a && r < B.b) {
          v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(inner, B.a, r, 8, 1e-13) +
              boost::math::quadrature::gauss_kronrod<double, 21>::integrate(inner, r, B.b, 8, 1e-13);
        } else {
          v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(inner, B.a, B.b, 8, 1e-13);
        }
        return r * v;
      };
      const double I =
          boost::math::quadrature::gauss_kronrod<double, 21>::integrate(outer, A.a, A.b, 8, 1e-12);
      total += A.rho * B.rho * 2.0 * kPi * I;
    }
  }
  return 0.5 * g * total;
}

CriterionResult ln_kernel_reduction() {
  Check c;
  Physics ph;
  ph.N = 2;
  ph.gamma = 2.0;
  ph.g = 1.0;
  RadialState st = make_state(ph, 2.0, 8);
  for (std::size_t i = 0; i < st.size(); ++i) {
    const double r = st.grid.center(i);
    st.rho[i] = (r > 0.5 && r < 1.0) ? 1.0 : (r > 1.5 && r < 2.0) ? 2.0 : 0.0;
  }
  const double ring = potential_energy(st);
  const double direct = direct_two_ring_energy(ph.g);
  const double rel = std::abs(ring - direct) / std::abs(direct);
  c.require(rel <= 1e-6, "ring " + sci(ring) + " direct " + sci(direct) + " rel " + sci(rel));
  return {11, "2D ln-kernel reduction", c.ok, c.detail.str()};
}

using Runner = CriterionResult (*)();

const std::vector<std::pair<std::string, Runner>>& criteria() {
  static const std::vector<std::pair<std::string, Runner>> list = {
      {"Lane-Emden analytic agreement", lane_emden_agreement},
      {"core/mean density ratio", density_ratio_check},
      {"scale-factor blowup", scale_factor_blowup},
      {"exact-family residual convergence", family_residuals},
      {"gamma=6/5 hydrostatic oracle", hydrostatic_oracle},
      {"stationary identities", stationary_identities_check},
      {"energy law", energy_law},
      {"virial identity", virial_identity},
      {"theorem-hypothesis classification", classification_sweep},
      {"2D finite-time blowup end to end", theorem1_end_to_end},
      {"2D ln-kernel reduction", ln_kernel_reduction},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const std::vector<int>& only, const std::function<void(const CriterionResult&)>& sink) {
  std::vector<CriterionResult> out;
  const auto& list = criteria();
  for (int id = 1; id <= static_cast<int>(list.size()); ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = list[id - 1].second();
    } catch (const std::exception& e) {
      r = {id, list[id - 1].first, false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (sink) sink(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, " (%.1fs)", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name +
         ": " + r.detail + time;
}

}  // namespace eplab::tools
