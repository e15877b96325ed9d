#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eplab/polytrope.hpp"
#include "eplab/radial_state.hpp"
#include "eplab/scale_factor.hpp"

namespace eplab {

/// Pressure law and coupling shared by a field and its residual evaluation.
struct Closure {
  double K = 1.0;
  double gamma = 1.0;
  double g = 1.0;
};

/// Self-similar collapse family
///   rho(t, r) = a^{-N} F(y(r / a)),   u(t, r) = (a' / a) r,
/// with a'' = -lambda / a^{N-1}. Kind power (N >= 3, gamma = (2N-2)/N,
/// F = y^{N/(N-2)}, mu = N (N-2) lambda / ((2N-2) K)) or isothermal2d
/// (N = 2, gamma = 1, F = e^y, mu = 2 lambda / K).
struct FamilyParams {
  ProfileKind kind = ProfileKind::power;
  int N = 3;
  double K = 1.0;
  double g = 1.0;
  double lambda = 0.0;
  double alpha = 1.0;
  double a0 = 1.0;
  double a1 = 0.0;
  /// When given, must agree with the coupling formula for (lambda, K).
  std::optional<double> mu;
  double t_end = 1.0;
  double dt = 1e-3;
  IntegrationOptions profile_options{};
};

struct FamilySolution {
  FamilyParams params;
  double mu = 0.0;
  Closure closure;
  ProfileInterpolant profile;
  ScaleTrajectory scale;
};

double family_mu(ProfileKind kind, int N, double K, double lambda);
double family_gamma(ProfileKind kind, int N);

/// Solves the profile and scale ODEs. Throws InvalidInput for the classic
/// kind, an inconsistent mu, or a power profile without a zero on the span.
FamilySolution make_family(const FamilyParams& params);

double family_scale(const FamilySolution& fam, double t);
double family_density(const FamilySolution& fam, double t, double r);
double family_velocity(const FamilySolution& fam, double t, double r);

/// Point-sampled family on a uniform grid (beta = 0). Throws InvalidInput at
/// or after blowup, beyond the integrated span, or when the grid does not
/// cover the support (power) / exceeds the profile span (isothermal2d).
RadialState family_state(const FamilySolution& fam, double t, double r_max, std::size_t cells);

/// A radial density/velocity field that can be substituted into the
/// Euler-Poisson system. density must be even and velocity odd in r so that
/// stencils may cross the origin.
class RadialField {
 public:
  virtual ~RadialField() = default;
  virtual int dimension() const = 0;
  virtual Closure closure() const = 0;
  virtual double density(double t, double r) const = 0;
  virtual double velocity(double t, double r) const = 0;
  /// int_0^r rho(t, s) s^{N-1} ds
  virtual double enclosed(double t, double r) const = 0;
  virtual double max_density(double t) const = 0;
};

class FamilyField final : public RadialField {
 public:
  explicit FamilyField(const FamilySolution& fam) : fam_(fam) {}
  int dimension() const override { return fam_.params.N; }
  Closure closure() const override { return fam_.closure; }
  double density(double t, double r) const override;
  double velocity(double t, double r) const override;
  double enclosed(double t, double r) const override;
  double max_density(double t) const override;

 private:
  const FamilySolution& fam_;
};

/// base with density multiplied by a constant factor, velocity unchanged.
class ScaledDensityField final : public RadialField {
 public:
  ScaledDensityField(const RadialField& base, double factor) : base_(base), factor_(factor) {}
  int dimension() const override { return base_.dimension(); }
  Closure closure() const override { return base_.closure(); }
  double density(double t, double r) const override { return factor_ * base_.density(t, r); }
  double velocity(double t, double r) const override { return base_.velocity(t, r); }
  double enclosed(double t, double r) const override { return factor_ * base_.enclosed(t, r); }
  double max_density(double t) const override { return factor_ * base_.max_density(t); }

 private:
  const RadialField& base_;
  double factor_;
};

class ZeroField final : public RadialField {
 public:
  ZeroField(int N, Closure closure) : N_(N), closure_(closure) {}
  int dimension() const override { return N_; }
  Closure closure() const override { return closure_; }
  double density(double, double) const override { return 0.0; }
  double velocity(double, double) const override { return 0.0; }
  double enclosed(double, double) const override { return 0.0; }
  double max_density(double) const override { return 0.0; }

 private:
  int N_;
  Closure closure_;
};

struct ResidualSteps {
  double dr = 1e-2;
  double dt = 1e-2;
};

struct ResidualNorms {
  double mass = 0.0;
  double momentum = 0.0;
  std::size_t points = 0;
};

/// Sup-norms of
///   rho_t + u rho_r + rho u_r + (N-1) rho u / r
///   rho (u_t + u u_r) + P_r + rho Phi_r,   Phi_r = alpha(N) g I(r) / r^{N-1}
/// by centred differences at the given radii where rho > 1e-12 max rho.
/// Throws InvalidInput if fewer than 4 radii fall inside a nonempty support,
/// or if t - dt < 0.
ResidualNorms pde_residual(const RadialField& field, double t, const std::vector<double>& radii,
                           const ResidualSteps& steps);

}  // namespace eplab
