#include "eplab/polytrope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"

namespace eplab {

namespace {

bool is_integer(double x) { return std::floor(x) == x; }

// Real power with the sign guard used throughout: integer exponents are the
// ordinary power, fractional exponents vanish for y <= 0.
double guarded_pow(double y, double p) {
  if (y > 0.0 || is_integer(p)) return std::pow(y, p);
  return 0.0;
}

double exponent_of(const ProfileSpec& spec) {
  switch (spec.kind) {
    case ProfileKind::classic:
      return spec.n;
    case ProfileKind::power:
      return static_cast<double>(spec.dimension) / (spec.dimension - 2);
    case ProfileKind::isothermal2d:
      break;
  }
  return 1.0;
}

double coefficient_of(const ProfileSpec& spec) {
  switch (spec.kind) {
    case ProfileKind::classic:
      return 1.0;
    case ProfileKind::power:
      return power_coefficient(spec.dimension, spec.K, spec.g);
    case ProfileKind::isothermal2d:
      return 2.0 * std::numbers::pi * spec.g / spec.K;
  }
  return 1.0;
}

class ProfileStepper {
 public:
  explicit ProfileStepper(const ProfileSpec& spec)
      : spec_(spec), drag_(drag_coefficient(spec)) {}

  std::array<double, 2> rhs(double z, double y, double dy) const {
    const double f = nonlinearity(spec_, y);
    const double ddy = spec_.mu - f - drag_ * dy / z;
    if (!std::isfinite(ddy)) {
      throw NumericalFailure("profile ODE: non-finite right-hand side at z = " +
                             std::to_string(z));
    }
    return {dy, ddy};
  }

  ProfileSample step(const ProfileSample& s, double h) const {
    const auto k1 = rhs(s.z, s.y, s.dy);
    const auto k2 = rhs(s.z + 0.5 * h, s.y + 0.5 * h * k1[0], s.dy + 0.5 * h * k1[1]);
    const auto k3 = rhs(s.z + 0.5 * h, s.y + 0.5 * h * k2[0], s.dy + 0.5 * h * k2[1]);
    const auto k4 = rhs(s.z + h, s.y + h * k3[0], s.dy + h * k3[1]);
    return {s.z + h, s.y + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            s.dy + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
  }

  // Even power series about the regular singular point:
  //   y = alpha + c z^2 + e z^4,  c = (mu - f(alpha)) / (2 N),
  //   e = -f'(alpha) c / (4 (N + 2)),  N = d + 1.
  ProfileSample series(double z) const {
    const double n_eff = drag_ + 1.0;
    const double c = (spec_.mu - nonlinearity(spec_, spec_.alpha)) / (2.0 * n_eff);
    const double e = -nonlinearity_slope(spec_, spec_.alpha) * c / (4.0 * (n_eff + 2.0));
    const double z2 = z * z;
    return {z, spec_.alpha + c * z2 + e * z2 * z2, 2.0 * c * z + 4.0 * e * z2 * z};
  }

 private:
  const ProfileSpec& spec_;
  double drag_;
};

bool stops_at_zero(const ProfileSpec& spec) { return spec.kind != ProfileKind::isothermal2d; }

void validate(const ProfileSpec& spec, const IntegrationOptions& opts) {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(opts.h) || opts.h <= 0.0) throw InvalidInput("profile: step h must be > 0");
  if (!finite(opts.z_max) || opts.z_max <= 0.0) throw InvalidInput("profile: z_max must be > 0");
  if (opts.h >= opts.z_max) throw InvalidInput("profile: step h must be smaller than z_max");
  if (opts.store_every == 0) throw InvalidInput("profile: store_every must be >= 1");
  if (!finite(spec.alpha) || !finite(spec.mu)) throw InvalidInput("profile: non-finite alpha or mu");
  switch (spec.kind) {
    case ProfileKind::classic:
      if (!finite(spec.n) || spec.n < 0.0) throw InvalidInput("lane-emden: index n must be >= 0");
      if (spec.alpha <= 0.0) throw InvalidInput("lane-emden: alpha must be > 0");
      if (spec.dimension != 3) throw InvalidInput("lane-emden: classic kind is three-dimensional");
      break;
    case ProfileKind::power:
      if (spec.dimension < 3) throw InvalidInput("power profile: N must be >= 3");
      if (spec.alpha <= 0.0) throw InvalidInput("power profile: alpha must be > 0");
      [[fallthrough]];
    case ProfileKind::isothermal2d:
      if (!finite(spec.K) || spec.K <= 0.0) throw InvalidInput("profile: K must be > 0");
      if (!finite(spec.g) || spec.g <= 0.0) throw InvalidInput("profile: g must be > 0");
      if (spec.kind == ProfileKind::isothermal2d && spec.dimension != 2) {
        throw InvalidInput("isothermal2d profile: N must be 2");
      }
      break;
  }
}

}  // namespace

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::classic:
      return "classic";
    case ProfileKind::power:
      return "power";
    case ProfileKind::isothermal2d:
      return "isothermal2d";
  }
  return "unknown";
}

ProfileKind parse_profile_kind(std::string_view name) {
  if (name == "classic") return ProfileKind::classic;
  if (name == "power") return ProfileKind::power;
  if (name == "isothermal2d") return ProfileKind::isothermal2d;
  throw InvalidInput("unknown profile kind '" + std::string(name) + "'");
}

double drag_coefficient(const ProfileSpec& spec) { return profile_dimension(spec) - 1.0; }

int profile_dimension(const ProfileSpec& spec) {
  switch (spec.kind) {
    case ProfileKind::classic:
      return 3;
    case ProfileKind::power:
      return spec.dimension;
    case ProfileKind::isothermal2d:
      return 2;
  }
  return 3;
}

double power_coefficient(int N, double K, double g) {
  if (N < 3) throw InvalidInput("power_coefficient: N must be >= 3");
  const double v = dimension_constants(N).volume;
  return N * (N - 2.0) * (N - 2.0) * v * g / ((2.0 * N - 2.0) * K);
}

double nonlinearity(const ProfileSpec& spec, double y) {
  if (spec.kind == ProfileKind::isothermal2d) return coefficient_of(spec) * std::exp(y);
  return coefficient_of(spec) * guarded_pow(y, exponent_of(spec));
}

double nonlinearity_slope(const ProfileSpec& spec, double y) {
  if (spec.kind == ProfileKind::isothermal2d) return coefficient_of(spec) * std::exp(y);
  const double p = exponent_of(spec);
  if (p == 0.0) return 0.0;
  return coefficient_of(spec) * p * guarded_pow(y, p - 1.0);
}

double density_shape(const ProfileSpec& spec, double y) {
  if (spec.kind == ProfileKind::isothermal2d) return std::exp(y);
  if (y <= 0.0) return 0.0;
  return std::pow(y, exponent_of(spec));
}

PolytropeProfile solve_profile(const ProfileSpec& spec, const IntegrationOptions& opts) {
  validate(spec, opts);
  const double h = opts.h;
  if (opts.z_max / h > 1e12) throw NumericalFailure("profile: step-size underflow");

  PolytropeProfile out;
  out.spec = spec;
  out.h = h;
  out.samples.push_back({0.0, spec.alpha, 0.0});

  const ProfileStepper stepper(spec);
  const auto steps = static_cast<std::size_t>(std::ceil(opts.z_max / h - 1e-9));
  const bool hunt_zero = stops_at_zero(spec);

  ProfileSample current = stepper.series(h);
  ProfileSample previous = out.samples.front();
  bool previous_stored = true;
  for (std::size_t k = 1;; ++k) {
    if (hunt_zero && current.y <= 0.0) {
      if (!previous_stored) out.samples.push_back(previous);
      out.samples.push_back(current);
      out.bracket = std::make_pair(previous, current);
      out.z_searched = current.z;
      break;
    }
    const bool store = (k % opts.store_every == 0) || k == steps;
    if (store) out.samples.push_back(current);
    if (k == steps) {
      out.z_searched = current.z;
      break;
    }
    previous = current;
    previous_stored = store;
    current = stepper.step(current, h);
    current.z = static_cast<double>(k + 1) * h;
  }

  out.first_zero = first_zero(out);
  return out;
}

PolytropeProfile solve_lane_emden(double n, double alpha, const IntegrationOptions& opts) {
  ProfileSpec spec;
  spec.kind = ProfileKind::classic;
  spec.n = n;
  spec.alpha = alpha;
  return solve_profile(spec, opts);
}

PolytropeProfile solve_lane_emden(double n, double alpha, double z_max, double h) {
  IntegrationOptions opts;
  opts.z_max = z_max;
  opts.h = h;
  return solve_lane_emden(n, alpha, opts);
}

PolytropeProfile solve_generalized_profile(ProfileKind kind, int N, double K, double mu,
                                           double alpha, const IntegrationOptions& opts,
                                           double g) {
  if (kind == ProfileKind::classic) {
    throw InvalidInput("solve_generalized_profile: use solve_lane_emden for the classic kind");
  }
  ProfileSpec spec;
  spec.kind = kind;
  spec.dimension = N;
  spec.K = K;
  spec.mu = mu;
  spec.alpha = alpha;
  spec.g = g;
  return solve_profile(spec, opts);
}

std::optional<ZeroPoint> refine_first_zero(const PolytropeProfile& profile) {
  if (!profile.bracket) return std::nullopt;
  const auto& [lo, hi] = *profile.bracket;
  if (lo.z <= 0.0) throw NumericalFailure("first_zero: step too coarse to resolve the first zero");

  const ProfileStepper stepper(profile.spec);
  double s_lo = 0.0;
  double s_hi = hi.z - lo.z;
  for (int it = 0; it < 200 && (s_hi - s_lo) > 1e-12 * (lo.z + s_lo); ++it) {
    const double mid = 0.5 * (s_lo + s_hi);
    if (stepper.step(lo, mid).y > 0.0) {
      s_lo = mid;
    } else {
      s_hi = mid;
    }
  }
  const double s = 0.5 * (s_lo + s_hi);
  return ZeroPoint{lo.z + s, stepper.step(lo, s).dy};
}

std::optional<double> first_zero(const PolytropeProfile& profile) {
  if (auto zp = refine_first_zero(profile)) return zp->z;
  return std::nullopt;
}

double density_ratio(const PolytropeProfile& profile) {
  if (profile.spec.kind != ProfileKind::classic) {
    throw InvalidInput("density_ratio: defined for the classic Lane-Emden kind only");
  }
  const auto zp = refine_first_zero(profile);
  if (!zp) {
    throw InvalidInput("density_ratio: no finite radius (no first zero within z <= " +
                       std::to_string(profile.z_searched) + ")");
  }
  return -3.0 / zp->z * zp->dy;
}

double stationary_density_6_5(double K, double A, double r) {
  if (!(K > 0.0) || !(A > 0.0)) throw InvalidInput("stationary_density_6_5: K and A must be > 0");
  if (!(r >= 0.0)) throw InvalidInput("stationary_density_6_5: r must be >= 0");
  const double prefactor = std::pow(3.0 * K * A * A / (2.0 * std::numbers::pi), 1.25);
  return prefactor * std::pow(1.0 + A * A * r * r, -2.5);
}

ProfileValue interpolate_profile(const PolytropeProfile& profile, double z) {
  const auto& s = profile.samples;
  if (s.empty()) throw InvalidInput("interpolate_profile: empty profile");
  if (z < 0.0) z = -z;
  if (profile.first_zero && z >= *profile.first_zero) return {0.0, 0.0};
  if (z > s.back().z) {
    throw InvalidInput("interpolate_profile: z = " + std::to_string(z) +
                       " is outside the sampled span [0, " + std::to_string(s.back().z) + "]");
  }
  auto it = std::upper_bound(s.begin(), s.end(), z,
                             [](double v, const ProfileSample& p) { return v < p.z; });
  if (it == s.begin()) return {s.front().y, s.front().dy};
  if (it == s.end()) return {s.back().y, s.back().dy};
  const ProfileSample& a = *(it - 1);
  const ProfileSample& b = *it;
  const double h = b.z - a.z;
  const double t = (z - a.z) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  const double y = h00 * a.y + h10 * h * a.dy + h01 * b.y + h11 * h * b.dy;
  const double d00 = (6 * t2 - 6 * t) / h;
  const double d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (-6 * t2 + 6 * t) / h;
  const double d11 = 3 * t2 - 2 * t;
  const double dy = d00 * a.y + d10 * a.dy + d01 * b.y + d11 * b.dy;
  return {y, dy};
}

double profile_to_density(const PolytropeProfile& profile, double a, double r) {
  if (!(a > 0.0)) throw InvalidInput("profile_to_density: scale a must be > 0");
  if (!(r >= 0.0)) throw InvalidInput("profile_to_density: r must be >= 0");
  const int N = profile_dimension(profile.spec);
  const double z = r / a;
  if (profile.first_zero && z >= *profile.first_zero) return 0.0;
  const double y = interpolate_profile(profile, z).y;
  return density_shape(profile.spec, y) / std::pow(a, N);
}

// ---------------------------------------------------------------------------

namespace {

// 3-point Gauss-Legendre on [a, b].
template <class F>
double gauss3(F&& f, double a, double b) {
  static constexpr double x = 0.7745966692414834;
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  return r * (5.0 / 9.0 * f(c - r * x) + 8.0 / 9.0 * f(c) + 5.0 / 9.0 * f(c + r * x));
}

}  // namespace

ProfileInterpolant::ProfileInterpolant(PolytropeProfile profile)
    : profile_(std::move(profile)), dimension_(profile_dimension(profile_.spec)) {
  const auto& s = profile_.samples;
  cumulative_.assign(s.size(), 0.0);
  const double edge = profile_.first_zero.value_or(s.back().z);
  auto integrand = [this](double z) { return shape(z) * std::pow(z, dimension_ - 1); };
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double lo = s[k - 1].z;
    const double hi = std::min(s[k].z, edge);
    cumulative_[k] = cumulative_[k - 1] + (hi > lo ? gauss3(integrand, lo, hi) : 0.0);
  }
}

double ProfileInterpolant::z_limit() const {
  if (profile_.first_zero) return std::numeric_limits<double>::infinity();
  return profile_.samples.back().z;
}

ProfileValue ProfileInterpolant::value(double z) const { return interpolate_profile(profile_, z); }

double ProfileInterpolant::shape(double z) const {
  if (profile_.first_zero && std::abs(z) >= *profile_.first_zero) return 0.0;
  return density_shape(profile_.spec, value(z).y);
}

double ProfileInterpolant::enclosed(double z) const {
  if (z <= 0.0) return 0.0;
  const auto& s = profile_.samples;
  const double edge = profile_.first_zero.value_or(s.back().z);
  if (profile_.first_zero && z >= edge) return cumulative_.back();
  if (z > s.back().z) {
    throw InvalidInput("ProfileInterpolant::enclosed: z outside the sampled span");
  }
  auto it = std::upper_bound(s.begin(), s.end(), z,
                             [](double v, const ProfileSample& p) { return v < p.z; });
  const std::size_t k = static_cast<std::size_t>(it - s.begin()) - 1;
  auto integrand = [this](double x) { return shape(x) * std::pow(x, dimension_ - 1); };
  const double hi = std::min(z, edge);
  return cumulative_[k] + (hi > s[k].z ? gauss3(integrand, s[k].z, hi) : 0.0);
}

}  // namespace eplab
