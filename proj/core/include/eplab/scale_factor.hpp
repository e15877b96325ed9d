#pragma once

#include <optional>
#include <vector>

namespace eplab {

struct ScaleSample {
  double t = 0.0;
  double a = 0.0;
  double adot = 0.0;
};

/// Solution of a'' = -lambda / a^{N-1}, a(0) = a0, a'(0) = a1.
///
/// The ODE conserves e = a'^2 / 2 + V(a) with V(a) = lambda ln a for N = 2 and
/// V(a) = -lambda a^{2-N} / (N - 2) for N >= 3.
struct ScaleTrajectory {
  int N = 3;
  double lambda = 0.0;
  double a0 = 1.0;
  double a1 = 0.0;
  std::vector<ScaleSample> samples;
  std::optional<double> blowup_time;
  double first_integral = 0.0;
  /// max |e(t) - e(0)| over all samples, and over samples with a >= 0.01 a0.
  double max_drift = 0.0;
  double max_drift_away_from_collapse = 0.0;

  double t_last() const { return samples.empty() ? 0.0 : samples.back().t; }
  /// Quintic Hermite interpolation using a, a' and a'' = -lambda / a^{N-1}.
  ScaleSample at(double t) const;
  double energy(const ScaleSample& s) const;
};

double scale_potential(int N, double lambda, double a);

/// Adaptive Dormand-Prince integration in the regularised time
/// d tau = dt / a^{N/2}, which keeps the collapse a -> 0 at bounded step
/// counts. Samples are kept at every accepted step, with at most dt between
/// consecutive samples. Stops at t_end or when a drops below 1e-10 a0; in the
/// latter case the floor crossing is refined by bisection and recorded as
/// blowup_time.
ScaleTrajectory integrate_scale(int N, double lambda, double a0, double a1, double t_end,
                                double dt);

/// Exactly -a0 / a1 for lambda = 0 and a1 < 0; otherwise the refined collapse
/// time recorded by integrate_scale, if any.
std::optional<double> blowup_time(const ScaleTrajectory& traj);

/// Collapse time from quadrature of the first integral,
///   T = int da / sqrt(2 (e - V(a))),
/// including the excursion to the turning point when a1 > 0. Absent when the
/// trajectory never reaches a = 0.
std::optional<double> collapse_time_by_quadrature(int N, double lambda, double a0, double a1);

}  // namespace eplab
