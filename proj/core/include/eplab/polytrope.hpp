#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace eplab {

/// Which profile ODE a PolytropeProfile solves. All three share the form
///
///   y'' + (d / z) y' + f(y) = mu,   y(0) = alpha,   y'(0) = 0
///
/// classic:      d = 2,     f(y) = y^n,                     mu = 0
/// power:        d = N - 1, f(y) = c_N y^{N/(N-2)},         N >= 3
/// isothermal2d: d = 1,     f(y) = (2 pi g / K) e^y
///
/// with c_N = N (N-2)^2 V(N) g / ((2N - 2) K).
enum class ProfileKind { classic, power, isothermal2d };

std::string_view to_string(ProfileKind kind);
/// Accepts "classic", "power", "isothermal2d". Throws InvalidInput otherwise.
ProfileKind parse_profile_kind(std::string_view name);

struct ProfileSpec {
  ProfileKind kind = ProfileKind::classic;
  double n = 0.0;      ///< polytropic index (classic only)
  int dimension = 3;   ///< N; fixed to 3 for classic and 2 for isothermal2d
  double alpha = 1.0;  ///< central value y(0)
  double mu = 0.0;     ///< right-hand side shift (generalized kinds)
  double K = 1.0;      ///< pressure constant (generalized kinds)
  double g = 1.0;      ///< gravitational coupling (generalized kinds)
};

struct IntegrationOptions {
  double z_max = 50.0;
  double h = 1e-4;
  /// Keep every k-th step. The last positive sample and the sign-change
  /// sample are always kept.
  std::size_t store_every = 1;
};

struct ProfileSample {
  double z = 0.0;
  double y = 0.0;
  double dy = 0.0;
};

struct PolytropeProfile {
  ProfileSpec spec;
  double h = 0.0;
  double z_searched = 0.0;  ///< span actually integrated
  std::vector<ProfileSample> samples;
  /// (last sample with y > 0, first sample with y <= 0) when a zero was crossed.
  std::optional<std::pair<ProfileSample, ProfileSample>> bracket;
  std::optional<double> first_zero;
};

/// d in the drag term d y' / z.
double drag_coefficient(const ProfileSpec& spec);
/// f(y), sign-guarded for fractional exponents (zero for y <= 0).
double nonlinearity(const ProfileSpec& spec, double y);
double nonlinearity_slope(const ProfileSpec& spec, double y);
/// Density in profile units: y^n, y^{N/(N-2)} or e^y; zero where y <= 0 for
/// the polytropic kinds.
double density_shape(const ProfileSpec& spec, double y);
/// Spatial dimension whose radial measure z^{N-1} dz matches the drag term.
int profile_dimension(const ProfileSpec& spec);
/// c_N = N (N-2)^2 V(N) g / ((2N - 2) K).
double power_coefficient(int N, double K, double g = 1.0);

/// Classic Lane-Emden equation y'' + (2/z) y' + y^n = 0.
PolytropeProfile solve_lane_emden(double n, double alpha, double z_max, double h = 1e-4);
PolytropeProfile solve_lane_emden(double n, double alpha, const IntegrationOptions& opts);

/// Power (N >= 3) or isothermal2d profile ODE. Classic kind is rejected here.
PolytropeProfile solve_generalized_profile(ProfileKind kind, int N, double K, double mu,
                                           double alpha, const IntegrationOptions& opts,
                                           double g = 1.0);

/// Fixed-step RK4 from z = h (series start) to z_max, stopping at the first
/// sign change of y for the classic and power kinds.
PolytropeProfile solve_profile(const ProfileSpec& spec, const IntegrationOptions& opts);

struct ZeroPoint {
  double z = 0.0;
  double dy = 0.0;
};

/// Root of y inside the recorded bracket, bisected on the RK4 step length to a
/// relative tolerance of 1e-12.
std::optional<ZeroPoint> refine_first_zero(const PolytropeProfile& profile);
std::optional<double> first_zero(const PolytropeProfile& profile);

/// Mean-to-central density ratio (-3 / z0) y'(z0). Classic kind with a zero only.
double density_ratio(const PolytropeProfile& profile);

/// rho = (3 K A^2 / 2 pi)^{5/4} (1 + A^2 r^2)^{-5/2}, the gamma = 6/5 closed form.
double stationary_density_6_5(double K, double A, double r);

/// Coupling g at which stationary_density_6_5 is in hydrostatic balance
/// under Laplacian(Phi) = 4 pi g rho. With g = 1 the balanced prefactor is
/// (9 K A^2 / 2 pi)^{5/4}.
inline constexpr double kStationary65Coupling = 3.0;

struct ProfileValue {
  double y = 0.0;
  double dy = 0.0;
};

/// Cubic Hermite interpolation of the samples. Beyond a recorded zero the
/// profile is reported as y = 0; beyond the searched span without a zero
/// InvalidInput is thrown.
ProfileValue interpolate_profile(const PolytropeProfile& profile, double z);

/// rho(t, r) = a^{-N} F(y(r / a)) for the profile's kind (F = density_shape);
/// zero outside the support of the polytropic kinds.
double profile_to_density(const PolytropeProfile& profile, double a, double r);

/// Profile with a precomputed enclosed integral
///   I(z) = int_0^z F(y(s)) s^{N-1} ds
/// for repeated density and gravity evaluations.
class ProfileInterpolant {
 public:
  explicit ProfileInterpolant(PolytropeProfile profile);

  const PolytropeProfile& profile() const { return profile_; }
  int dimension() const { return dimension_; }
  /// Edge of the support, if the profile has one.
  std::optional<double> support_edge() const { return profile_.first_zero; }
  /// Largest z at which the profile can be evaluated.
  double z_limit() const;

  ProfileValue value(double z) const;
  double shape(double z) const;
  double enclosed(double z) const;

 private:
  PolytropeProfile profile_;
  int dimension_ = 3;
  std::vector<double> cumulative_;
};

}  // namespace eplab
