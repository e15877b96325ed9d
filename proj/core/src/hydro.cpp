#include "eplab/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"

namespace eplab {

std::string_view to_string(Reconstruction r) {
  return r == Reconstruction::muscl ? "muscl" : "first_order";
}

std::string_view to_string(Limiter l) { return l == Limiter::mc ? "mc" : "minmod"; }

Reconstruction parse_reconstruction(std::string_view name) {
  if (name == "muscl") return Reconstruction::muscl;
  if (name == "first_order") return Reconstruction::first_order;
  throw InvalidInput("unknown reconstruction '" + std::string(name) +
                     "' (expected muscl or first_order)");
}

Limiter parse_limiter(std::string_view name) {
  if (name == "mc") return Limiter::mc;
  if (name == "minmod") return Limiter::minmod;
  throw InvalidInput("unknown limiter '" + std::string(name) + "' (expected mc or minmod)");
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::reached_t_end:
      return "reached_t_end";
    case Termination::support_hit_boundary:
      return "support_hit_boundary";
    case Termination::collapse_indicator:
      return "collapse_indicator";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kGhosts = 2;

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

double limited_slope(double left, double right, Limiter lim) {
  if (lim == Limiter::minmod) return minmod(left, right);
  if (left * right <= 0.0) return 0.0;
  const double centred = 0.5 * (left + right);
  const double bound = 2.0 * std::min(std::abs(left), std::abs(right));
  return std::copysign(std::min(std::abs(centred), bound), centred);
}

struct Fields {
  std::vector<double> rho;
  std::vector<double> mom;
};

class Scheme {
 public:
  Scheme(const RadialState& proto, const HydroOptions& opts)
      : proto_(proto), opts_(opts), n_(proto.size()) {
    rho_x_.resize(n_ + 2 * kGhosts);
    u_x_.resize(n_ + 2 * kGhosts);
    srho_.resize(n_ + 2 * kGhosts);
    su_.resize(n_ + 2 * kGhosts);
    flux_rho_.resize(n_ + 1);
    flux_mom_.resize(n_ + 1);
  }

  double pressure(double rho) const {
    return opts_.pressure ? proto_.phys.pressure(rho) : 0.0;
  }
  double sound(double rho) const { return opts_.pressure ? proto_.phys.sound_speed(rho) : 0.0; }

  // Time derivative of (rho, rho u).
  void rate(const Fields& f, Fields& out) {
    const auto& grid = proto_.grid;
    const double floor = proto_.floor;
    for (std::size_t i = 0; i < n_; ++i) {
      const double rho = f.rho[i];
      rho_x_[i + kGhosts] = rho;
      u_x_[i + kGhosts] = (rho > floor && rho > 0.0) ? f.mom[i] / rho : 0.0;
    }
    // Reflecting origin, outflow outer boundary.
    for (std::size_t k = 0; k < kGhosts; ++k) {
      rho_x_[kGhosts - 1 - k] = rho_x_[kGhosts + k];
      u_x_[kGhosts - 1 - k] = -u_x_[kGhosts + k];
      rho_x_[kGhosts + n_ + k] = rho_x_[kGhosts + n_ - 1];
      u_x_[kGhosts + n_ + k] = u_x_[kGhosts + n_ - 1];
    }
    const std::size_t m = n_ + 2 * kGhosts;
    std::fill(srho_.begin(), srho_.end(), 0.0);
    std::fill(su_.begin(), su_.end(), 0.0);
    if (opts_.reconstruction == Reconstruction::muscl) {
      for (std::size_t j = 1; j + 1 < m; ++j) {
        srho_[j] = limited_slope(rho_x_[j] - rho_x_[j - 1], rho_x_[j + 1] - rho_x_[j],
                                 opts_.limiter);
        su_[j] = limited_slope(u_x_[j] - u_x_[j - 1], u_x_[j + 1] - u_x_[j], opts_.limiter);
      }
    }
    // Face j separates cells j-1 and j; face 0 is the origin with zero area.
    flux_rho_[0] = 0.0;
    flux_mom_[0] = 0.0;
    for (std::size_t j = 1; j <= n_; ++j) {
      const std::size_t l = j - 1 + kGhosts, r = j + kGhosts;
      const double rl = std::max(0.0, rho_x_[l] + 0.5 * srho_[l]);
      const double rr = std::max(0.0, rho_x_[r] - 0.5 * srho_[r]);
      const double ul = u_x_[l] + 0.5 * su_[l];
      const double ur = u_x_[r] - 0.5 * su_[r];
      const double pl = pressure(rl), pr = pressure(rr);
      const double s = std::max(std::abs(ul) + sound(rl), std::abs(ur) + sound(rr));
      flux_rho_[j] = 0.5 * (rl * ul + rr * ur) - 0.5 * s * (rr - rl);
      flux_mom_[j] = 0.5 * (rl * ul * ul + pl + rr * ur * ur + pr) - 0.5 * s * (rr * ur - rl * ul);
    }

    out.rho.resize(n_);
    out.mom.resize(n_);
    std::vector<double> phi_r;
    if (opts_.gravity) {
      scratch_.rho = f.rho;
      phi_r = gravity_acceleration(scratch_);
    }
    const double beta = proto_.phys.beta;
    for (std::size_t i = 0; i < n_; ++i) {
      const double am = grid.area(i), ap = grid.area(i + 1), vol = grid.volume(i);
      out.rho[i] = -(ap * flux_rho_[i + 1] - am * flux_rho_[i]) / vol;
      double dm = -(ap * flux_mom_[i + 1] - am * flux_mom_[i]) / vol;
      dm += pressure(f.rho[i]) * (ap - am) / vol;
      if (opts_.gravity) dm -= f.rho[i] * phi_r[i];
      dm -= beta * f.mom[i];
      out.mom[i] = dm;
    }
  }

  void prepare_scratch() {
    scratch_ = proto_;
    scratch_.u.assign(n_, 0.0);
  }

 private:
  const RadialState& proto_;
  HydroOptions opts_;
  std::size_t n_;
  std::vector<double> rho_x_, u_x_, srho_, su_, flux_rho_, flux_mom_;
  RadialState scratch_;
};

void impose_floor(Fields& f, double floor, double area, const RadialGrid& grid,
                  StepReport& report) {
  for (std::size_t i = 0; i < f.rho.size(); ++i) {
    if (f.rho[i] < 0.0) {
      report.clamped_mass += -f.rho[i] * grid.volume(i) * area;
      ++report.clamped_cells;
      f.rho[i] = 0.0;
    }
    if (f.rho[i] <= floor) f.mom[i] = 0.0;
  }
}

void check_finite(const Fields& f, double t) {
  for (std::size_t i = 0; i < f.rho.size(); ++i) {
    if (!std::isfinite(f.rho[i]) || !std::isfinite(f.mom[i])) {
      throw NumericalFailure("hydro step: non-finite value in cell " + std::to_string(i) +
                             " near t = " + std::to_string(t));
    }
  }
}

double total_variation(const std::vector<double>& u) {
  double tv = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) tv += std::abs(u[i] - u[i - 1]);
  return tv;
}

}  // namespace

double max_stable_dt(const RadialState& state, const HydroOptions& opts) {
  const auto& grid = state.grid;
  const std::size_t n = state.size();
  std::vector<double> speed(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = state.rho[i];
    const double c = opts.pressure ? state.phys.sound_speed(rho) : 0.0;
    speed[i] = (rho > state.floor && rho > 0.0) ? std::abs(state.u[i]) + c : 0.0;
  }
  double dt = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double s = speed[i];
    if (i > 0) s = std::max(s, speed[i - 1]);
    if (i + 1 < n) s = std::max(s, speed[i + 1]);
    if (s <= 0.0) continue;
    const double width = 2.0 * grid.volume(i) / (grid.area(i) + grid.area(i + 1));
    dt = std::min(dt, width / s);
  }
  if (opts.gravity) {
    const std::vector<double> phi_r = gravity_acceleration(state);
    double gmax = 0.0;
    for (double a : phi_r) gmax = std::max(gmax, std::abs(a));
    if (gmax > 0.0) dt = std::min(dt, std::sqrt(grid.dr() / gmax));
  }
  if (state.phys.beta > 0.0) dt = std::min(dt, 1.0 / state.phys.beta);
  return opts.cfl * dt;
}

RadialState step(const RadialState& state, double dt, const HydroOptions& opts,
                 StepReport* report) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("step: dt must be finite and > 0");
  if (!(opts.cfl > 0.0 && opts.cfl <= 1.0)) throw InvalidInput("step: cfl must lie in (0, 1]");
  const double limit = max_stable_dt(state, opts);
  if (dt > limit * (1.0 + 1e-12)) {
    throw InvalidInput("step: CFL violation, dt = " + std::to_string(dt) +
                       " exceeds the stable step " + std::to_string(limit));
  }
  const std::size_t n = state.size();
  const double area = unit_sphere_area(state.phys.N);
  StepReport local;

  Scheme scheme(state, opts);
  scheme.prepare_scratch();
  Fields u0{state.rho, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) u0.mom[i] = state.rho[i] * state.u[i];

  Fields k, u1;
  scheme.rate(u0, k);
  u1.rho.resize(n);
  u1.mom.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    u1.rho[i] = u0.rho[i] + dt * k.rho[i];
    u1.mom[i] = u0.mom[i] + dt * k.mom[i];
  }
  impose_floor(u1, state.floor, area, state.grid, local);
  check_finite(u1, state.t);

  scheme.rate(u1, k);
  Fields u2;
  u2.rho.resize(n);
  u2.mom.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    u2.rho[i] = 0.5 * u0.rho[i] + 0.5 * (u1.rho[i] + dt * k.rho[i]);
    u2.mom[i] = 0.5 * u0.mom[i] + 0.5 * (u1.mom[i] + dt * k.mom[i]);
  }
  impose_floor(u2, state.floor, area, state.grid, local);
  check_finite(u2, state.t);

  RadialState out = state;
  out.rho = std::move(u2.rho);
  for (std::size_t i = 0; i < n; ++i) {
    out.u[i] = out.rho[i] > state.floor ? u2.mom[i] / out.rho[i] : 0.0;
  }
  out.t = state.t + dt;
  if (report) {
    report->clamped_cells += local.clamped_cells;
    report->clamped_mass += local.clamped_mass;
  }
  if (out.rho[n - 1] > out.floor || out.rho[n - 2] > out.floor) {
    throw SupportHitBoundary("support reached the outer boundary r_max = " +
                             std::to_string(state.grid.r_max()) +
                             " at t = " + std::to_string(out.t));
  }
  return out;
}

Snapshot take_snapshot(const RadialState& state) {
  Snapshot s;
  s.state = state;
  s.energy = energy(state);
  s.virial = virial_sample(state);
  s.gap_functional = gap_functional(state);
  s.max_density = state.max_density();
  s.support_radius = support_radius(state);
  return s;
}

EvolveResult evolve(RadialState state, const EvolveOptions& opts) {
  validate(state);
  if (!(opts.snapshot_every > 0.0)) throw InvalidInput("evolve: snapshot_every must be > 0");
  if (!(opts.t_end >= state.t)) throw InvalidInput("evolve: t_end precedes the initial time");
  if (!(opts.collapse_factor > 1.0)) throw InvalidInput("evolve: collapse_factor must be > 1");
  if (state.floor == 0.0) state.reset_floor();

  EvolveResult result;
  result.initial_max_density = state.max_density();
  double c_ref = 0.0;
  for (double rho : state.rho) c_ref = std::max(c_ref, state.phys.sound_speed(rho));
  const double tv_ref = std::max(total_variation(state.u), 1e-3 * c_ref);

  auto push = [&](const RadialState& s) {
    result.snapshots.push_back(take_snapshot(s));
    if (opts.on_snapshot) opts.on_snapshot(result.snapshots.back());
  };

  const double t0 = state.t;
  push(state);
  std::size_t next_index = 1;

  while (state.t < opts.t_end) {
    if (result.steps >= opts.max_steps) {
      throw NumericalFailure("evolve: step limit " + std::to_string(opts.max_steps) +
                             " reached at t = " + std::to_string(state.t));
    }
    const double cadence = t0 + static_cast<double>(next_index) * opts.snapshot_every;
    const double target = std::min(opts.t_end, cadence);
    const double dt = std::min(max_stable_dt(state, opts.hydro), target - state.t);
    const bool lands = dt >= target - state.t;
    StepReport rep;
    try {
      state = step(state, dt, opts.hydro, &rep);
    } catch (const SupportHitBoundary& e) {
      result.termination = Termination::support_hit_boundary;
      result.detail = e.what();
      break;
    }
    ++result.steps;
    result.clamped_cells += rep.clamped_cells;
    result.clamped_mass += rep.clamped_mass;

    if (tv_ref > 0.0) {
      const double ratio = total_variation(state.u) / tv_ref;
      result.max_tv_ratio = std::max(result.max_tv_ratio, ratio);
      if (ratio > opts.tv_growth_factor) result.smooth_regime_ended = true;
    }
    if (lands) {
      state.t = target;
      if (target == cadence) {
        push(state);
        ++next_index;
      }
    }
    const double rho_max = state.max_density();
    if (result.initial_max_density > 0.0) {
      result.max_density_ratio =
          std::max(result.max_density_ratio, rho_max / result.initial_max_density);
      if (rho_max > opts.collapse_factor * result.initial_max_density) {
        result.termination = Termination::collapse_indicator;
        result.detail = "max density exceeded " + std::to_string(opts.collapse_factor) +
                        " x initial at t = " + std::to_string(state.t);
        break;
      }
    }
  }
  result.final = take_snapshot(state);
  return result;
}

namespace {

template <typename F>
void for_each_gradient(const RadialState& state, F&& f) {
  const std::size_t n = state.size();
  const double dr = state.grid.dr();
  const std::vector<double> phi_r = gravity_acceleration(state);
  auto P = [&](std::size_t i) { return state.phys.pressure(state.rho[i]); };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t left = (i == 0) ? 0 : i - 1;
    if (!(state.rho[i] > state.floor) || !(state.rho[left] > state.floor) ||
        !(state.rho[i + 1] > state.floor)) {
      continue;
    }
    const double dpdr = (P(i + 1) - P(left)) / (2.0 * dr);
    f(dpdr, state.rho[i] * phi_r[i]);
  }
}

}  // namespace

double hydrostatic_residual(const RadialState& state) {
  double sup = 0.0;
  for_each_gradient(state, [&](double dpdr, double force) {
    sup = std::max(sup, std::abs(dpdr + force));
  });
  return sup;
}

double pressure_gradient_scale(const RadialState& state) {
  double sup = 0.0;
  for_each_gradient(state, [&](double dpdr, double) { sup = std::max(sup, std::abs(dpdr)); });
  return sup;
}

}  // namespace eplab
