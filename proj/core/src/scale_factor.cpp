#include "eplab/scale_factor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/numeric/odeint.hpp>

#include "eplab/errors.hpp"

namespace eplab {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 3>;  // (t, a, adot) in regularised time tau

constexpr double kFloorFraction = 1e-10;
constexpr double kAbsTol = 1e-13;
constexpr double kRelTol = 1e-12;
constexpr double kQuadTol = 1e-13;

struct RegularisedSystem {
  int N;
  double lambda;

  void operator()(const State& x, State& dxdtau, double /*tau*/) const {
    const double a = x[1];
    const double w = std::pow(a, 0.5 * N);  // dt / dtau
    dxdtau[0] = w;
    dxdtau[1] = w * x[2];
    dxdtau[2] = -lambda * std::pow(a, 1.0 - 0.5 * N);
  }
};

double acceleration(int N, double lambda, double a) { return -lambda / std::pow(a, N - 1); }

}  // namespace

double scale_potential(int N, double lambda, double a) {
  if (N == 2) return lambda * std::log(a);
  return -lambda * std::pow(a, 2.0 - N) / (N - 2.0);
}

double ScaleTrajectory::energy(const ScaleSample& s) const {
  return 0.5 * s.adot * s.adot + scale_potential(N, lambda, s.a);
}

ScaleSample ScaleTrajectory::at(double t) const {
  if (samples.empty()) throw InvalidInput("ScaleTrajectory::at: empty trajectory");
  if (t < samples.front().t || t > samples.back().t) {
    throw InvalidInput("ScaleTrajectory::at: t = " + std::to_string(t) +
                       " outside the integrated span");
  }
  auto it = std::upper_bound(samples.begin(), samples.end(), t,
                             [](double v, const ScaleSample& s) { return v < s.t; });
  if (it == samples.begin()) return samples.front();
  if (it == samples.end()) return samples.back();
  const ScaleSample& p = *(it - 1);
  const ScaleSample& q = *it;
  const double h = q.t - p.t;
  const double s = (t - p.t) / h;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  // Quintic Hermite basis on [0, 1].
  const double h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
  const double h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
  const double h2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
  const double h3 = 10 * s3 - 15 * s4 + 6 * s5;
  const double h4 = -4 * s3 + 7 * s4 - 3 * s5;
  const double h5 = 0.5 * (s3 - 2 * s4 + s5);
  const double d0 = (-30 * s2 + 60 * s3 - 30 * s4) / h;
  const double d1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
  const double d2 = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4) * h;
  const double d3 = (30 * s2 - 60 * s3 + 30 * s4) / h;
  const double d4 = -12 * s2 + 28 * s3 - 15 * s4;
  const double d5 = 0.5 * (3 * s2 - 8 * s3 + 5 * s4) * h;
  const double pa = acceleration(N, lambda, p.a);
  const double qa = acceleration(N, lambda, q.a);
  ScaleSample out;
  out.t = t;
  out.a = h0 * p.a + h1 * h * p.adot + h2 * h * h * pa + h3 * q.a + h4 * h * q.adot +
          h5 * h * h * qa;
  out.adot = d0 * p.a + d1 * p.adot + d2 * pa + d3 * q.a + d4 * q.adot + d5 * qa;
  return out;
}

ScaleTrajectory integrate_scale(int N, double lambda, double a0, double a1, double t_end,
                                double dt) {
  if (N < 2) throw InvalidInput("integrate_scale: N must be >= 2");
  if (!(a0 > 0.0) || !std::isfinite(a0)) throw InvalidInput("integrate_scale: a0 must be > 0");
  if (!(dt > 0.0)) throw InvalidInput("integrate_scale: dt must be > 0");
  if (!(t_end > 0.0)) throw InvalidInput("integrate_scale: t_end must be > 0");
  if (!std::isfinite(lambda) || !std::isfinite(a1)) {
    throw InvalidInput("integrate_scale: non-finite lambda or a1");
  }

  ScaleTrajectory traj;
  traj.N = N;
  traj.lambda = lambda;
  traj.a0 = a0;
  traj.a1 = a1;
  traj.samples.push_back({0.0, a0, a1});
  traj.first_integral = traj.energy(traj.samples.front());

  const RegularisedSystem sys{N, lambda};
  const double floor = kFloorFraction * a0;
  auto controlled = odeint::make_controlled(kAbsTol, kRelTol, odeint::runge_kutta_dopri5<State>());
  odeint::runge_kutta_dopri5<State> plain;

  auto single_step = [&](const State& from, double dtau) {
    State out;
    // FSAL: drop the derivative cached from the previous trial state.
    plain.reset();
    plain.do_step(sys, from, 0.0, out, dtau);
    return out;
  };
  // Largest step length in [0, dtau] keeping pred(x) false, by bisection.
  auto refine = [&](const State& from, double dtau, auto&& crossed) {
    double lo = 0.0, hi = dtau;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (crossed(single_step(from, mid))) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return single_step(from, hi);
  };
  auto record = [&](const State& x) {
    const ScaleSample s{x[0], x[1], x[2]};
    traj.samples.push_back(s);
    const double drift = std::abs(traj.energy(s) - traj.first_integral);
    traj.max_drift = std::max(traj.max_drift, drift);
    if (s.a >= 0.01 * a0) {
      traj.max_drift_away_from_collapse = std::max(traj.max_drift_away_from_collapse, drift);
    }
  };

  State x{0.0, a0, a1};
  double tau = 0.0;
  double dtau = dt / std::pow(a0, 0.5 * N);
  constexpr long kMaxAttempts = 200'000'000;
  for (long attempt = 0;; ++attempt) {
    if (attempt > kMaxAttempts) {
      throw NumericalFailure("integrate_scale: step budget exhausted at t = " +
                             std::to_string(x[0]));
    }
    dtau = std::min(dtau, dt / std::pow(x[1], 0.5 * N));
    const State before = x;
    const double tau_before = tau;
    const auto result = controlled.try_step(sys, x, tau, dtau);
    if (result == odeint::fail) {
      if (!(dtau > 0.0) || tau + dtau == tau) {
        throw NumericalFailure("integrate_scale: step-size underflow at t = " +
                               std::to_string(before[0]) + ", a = " + std::to_string(before[1]));
      }
      continue;
    }
    if (!std::isfinite(x[0]) || !std::isfinite(x[1]) || !std::isfinite(x[2])) {
      throw NumericalFailure("integrate_scale: non-finite state after t = " +
                             std::to_string(before[0]));
    }
    const double taken = tau - tau_before;
    if (x[1] < floor) {
      const State hit = refine(before, taken, [&](const State& s) { return !(s[1] >= floor); });
      record(hit);
      traj.blowup_time = hit[0];
      break;
    }
    if (x[0] >= t_end) {
      const State end = refine(before, taken, [&](const State& s) { return s[0] >= t_end; });
      State clipped = end;
      clipped[0] = t_end;
      record(clipped);
      break;
    }
    record(x);
  }
  return traj;
}

std::optional<double> blowup_time(const ScaleTrajectory& traj) {
  if (traj.lambda == 0.0) {
    if (traj.a1 < 0.0) return -traj.a0 / traj.a1;
    return std::nullopt;
  }
  return traj.blowup_time;
}

std::optional<double> collapse_time_by_quadrature(int N, double lambda, double a0, double a1) {
  if (N < 2) throw InvalidInput("collapse_time_by_quadrature: N must be >= 2");
  if (!(a0 > 0.0)) throw InvalidInput("collapse_time_by_quadrature: a0 must be > 0");
  if (lambda == 0.0) {
    if (a1 < 0.0) return -a0 / a1;
    return std::nullopt;
  }
  if (lambda < 0.0) return std::nullopt;

  const double e = 0.5 * a1 * a1 + scale_potential(N, lambda, a0);
  double a_max = a0;
  if (a1 > 0.0) {
    if (N == 2) {
      a_max = std::exp(e / lambda);
    } else {
      if (e >= 0.0) return std::nullopt;
      a_max = std::pow(-lambda / ((N - 2.0) * e), 1.0 / (N - 2.0));
    }
  }

  // V(a_max) - V(a) written in terms of the gap d = a_max - a.
  auto potential_gap = [&](double a, double d) {
    const double l = std::log1p(d / a);
    if (N == 2) return lambda * l;
    return lambda / (N - 2.0) * std::pow(a_max, 2.0 - N) * std::expm1((N - 2.0) * l);
  };
  // e - V(a_max): zero at the turning point, a1^2 / 2 when starting inward.
  const double e_gap = a1 > 0.0 ? 0.0 : 0.5 * a1 * a1;

  boost::math::quadrature::tanh_sinh<double> integrator;
  auto inverse_speed = [&](double a, double d) {
    if (a <= 0.0) return 0.0;
    const double k = 2.0 * (e_gap + potential_gap(a, d));
    return k > 0.0 ? 1.0 / std::sqrt(k) : 0.0;
  };
  // x in (0, a_max); xc is the distance to the nearer endpoint.
  auto full = [&](double x, double xc) {
    const double d = (x > 0.5 * a_max) ? xc : a_max - x;
    return inverse_speed(x, d);
  };
  double total = integrator.integrate(full, 0.0, a_max, kQuadTol);
  if (a1 > 0.0) {
    auto outward = [&](double x, double xc) {
      const double d = (x > 0.5 * (a0 + a_max)) ? xc : a_max - x;
      return inverse_speed(x, d);
    };
    total += integrator.integrate(outward, a0, a_max, kQuadTol);
  }
  return total;
}

}  // namespace eplab
