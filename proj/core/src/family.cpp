#include "eplab/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"

namespace eplab {

double family_mu(ProfileKind kind, int N, double K, double lambda) {
  switch (kind) {
    case ProfileKind::power:
      return N * (N - 2.0) * lambda / ((2.0 * N - 2.0) * K);
    case ProfileKind::isothermal2d:
      return 2.0 * lambda / K;
    case ProfileKind::classic:
      break;
  }
  throw InvalidInput("family_mu: the classic kind has no collapse family");
}

double family_gamma(ProfileKind kind, int N) {
  switch (kind) {
    case ProfileKind::power:
      return (2.0 * N - 2.0) / N;
    case ProfileKind::isothermal2d:
      return 1.0;
    case ProfileKind::classic:
      break;
  }
  throw InvalidInput("family_gamma: the classic kind has no collapse family");
}

FamilySolution make_family(const FamilyParams& p) {
  if (p.kind == ProfileKind::classic) {
    throw InvalidInput("family: kind must be power or isothermal2d");
  }
  if (p.kind == ProfileKind::power && p.N < 3) {
    throw InvalidInput("family: power kind requires N >= 3");
  }
  if (p.kind == ProfileKind::isothermal2d && p.N != 2) {
    throw InvalidInput("family: isothermal2d kind requires N = 2");
  }
  if (!(p.K > 0.0)) throw InvalidInput("family: K must be > 0");
  if (!(p.g > 0.0)) throw InvalidInput("family: g must be > 0");
  const double mu = family_mu(p.kind, p.N, p.K, p.lambda);
  if (p.mu && std::abs(*p.mu - mu) > 1e-12 * std::max(1.0, std::abs(mu))) {
    throw InvalidInput("family: inconsistent (lambda, mu, K): lambda = " + std::to_string(p.lambda) +
                       " and K = " + std::to_string(p.K) + " require mu = " + std::to_string(mu) +
                       ", got " + std::to_string(*p.mu));
  }

  PolytropeProfile profile =
      solve_generalized_profile(p.kind, p.N, p.K, mu, p.alpha, p.profile_options, p.g);
  if (p.kind == ProfileKind::power && !profile.first_zero) {
    throw InvalidInput("family: power profile has no zero on [0, " +
                       std::to_string(profile.z_searched) + "]; lambda too large or span too short");
  }
  ScaleTrajectory scale = integrate_scale(p.N, p.lambda, p.a0, p.a1, p.t_end, p.dt);

  return FamilySolution{p, mu, Closure{p.K, family_gamma(p.kind, p.N), p.g},
                        ProfileInterpolant(std::move(profile)), std::move(scale)};
}

double family_scale(const FamilySolution& fam, double t) { return fam.scale.at(t).a; }

double family_density(const FamilySolution& fam, double t, double r) {
  const double a = family_scale(fam, t);
  return fam.profile.shape(std::abs(r) / a) / std::pow(a, fam.params.N);
}

double family_velocity(const FamilySolution& fam, double t, double r) {
  const ScaleSample s = fam.scale.at(t);
  return s.adot / s.a * r;
}

RadialState family_state(const FamilySolution& fam, double t, double r_max, std::size_t cells) {
  if (const auto T = blowup_time(fam.scale); T && t >= *T) {
    throw InvalidInput("family_state: t = " + std::to_string(t) + " is at or after blowup T = " +
                       std::to_string(*T));
  }
  if (t < 0.0 || t > fam.scale.t_last()) {
    throw InvalidInput("family_state: t outside the integrated span [0, " +
                       std::to_string(fam.scale.t_last()) + "]");
  }
  const ScaleSample s = fam.scale.at(t);
  if (const auto edge = fam.profile.support_edge()) {
    if (s.a * *edge >= r_max) {
      throw InvalidInput("family_state: grid radius " + std::to_string(r_max) +
                         " does not cover the support a Z = " + std::to_string(s.a * *edge));
    }
  } else if (r_max / s.a > fam.profile.z_limit()) {
    throw InvalidInput("family_state: grid radius exceeds the profile span");
  }

  Physics phys;
  phys.N = fam.params.N;
  phys.gamma = fam.closure.gamma;
  phys.K = fam.closure.K;
  phys.g = fam.closure.g;
  phys.beta = 0.0;
  RadialState state = make_state(phys, r_max, cells);
  const double scale = std::pow(s.a, phys.N);
  for (std::size_t i = 0; i < cells; ++i) {
    const double r = state.grid.center(i);
    state.rho[i] = fam.profile.shape(r / s.a) / scale;
    state.u[i] = s.adot / s.a * r;
  }
  state.t = t;
  state.reset_floor();
  return state;
}

double FamilyField::density(double t, double r) const { return family_density(fam_, t, r); }

double FamilyField::velocity(double t, double r) const { return family_velocity(fam_, t, r); }

double FamilyField::enclosed(double t, double r) const {
  // The a^{-N} density factor cancels against the Jacobian a^N.
  return fam_.profile.enclosed(std::abs(r) / family_scale(fam_, t));
}

double FamilyField::max_density(double t) const {
  const double a = family_scale(fam_, t);
  return fam_.profile.shape(0.0) / std::pow(a, fam_.params.N);
}

ResidualNorms pde_residual(const RadialField& field, double t, const std::vector<double>& radii,
                           const ResidualSteps& steps) {
  if (!(steps.dr > 0.0) || !(steps.dt > 0.0)) {
    throw InvalidInput("pde_residual: difference steps must be > 0");
  }
  if (t - steps.dt < 0.0) throw InvalidInput("pde_residual: t - dt must be >= 0");
  const int N = field.dimension();
  const Closure c = field.closure();
  const double coupling = dimension_constants(N).alpha * c.g;
  auto pressure = [&](double rho) {
    if (rho <= 0.0) return 0.0;
    return c.gamma == 1.0 ? c.K * rho : c.K * std::pow(rho, c.gamma);
  };

  const double rho_max = field.max_density(t);
  ResidualNorms out;
  if (!(rho_max > 0.0)) return out;
  const double threshold = 1e-12 * rho_max;
  const double hr = steps.dr, ht = steps.dt;

  for (double r : radii) {
    if (!(r > 0.0)) continue;
    const double rho = field.density(t, r);
    if (!(rho > threshold)) continue;
    const double u = field.velocity(t, r);
    const double rho_rp = field.density(t, r + hr), rho_rm = field.density(t, r - hr);
    const double rho_t = (field.density(t + ht, r) - field.density(t - ht, r)) / (2 * ht);
    const double rho_r = (rho_rp - rho_rm) / (2 * hr);
    const double u_t = (field.velocity(t + ht, r) - field.velocity(t - ht, r)) / (2 * ht);
    const double u_r = (field.velocity(t, r + hr) - field.velocity(t, r - hr)) / (2 * hr);
    const double p_r = (pressure(rho_rp) - pressure(rho_rm)) / (2 * hr);
    const double phi_r = coupling * field.enclosed(t, r) / std::pow(r, N - 1);

    const double mass = rho_t + u * rho_r + rho * u_r + (N - 1) * rho * u / r;
    const double momentum = rho * (u_t + u * u_r) + p_r + rho * phi_r;
    out.mass = std::max(out.mass, std::abs(mass));
    out.momentum = std::max(out.momentum, std::abs(momentum));
    ++out.points;
  }
  if (out.points < 4) {
    throw InvalidInput("pde_residual: only " + std::to_string(out.points) +
                       " evaluation radii inside the support; refine the grid");
  }
  return out;
}

}  // namespace eplab
