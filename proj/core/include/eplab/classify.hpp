#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eplab {

enum class TheoremTag {
  thm1_2d,
  thm2_expansion,
  thm2_2a,
  thm2_2b,
  thm3_1,
  thm3_2,
  remark_critical,
  inconclusive
};

enum class Outcome { finite_time_blowup, global_expansion_bound, inconclusive };

/// "Thm1-2D", "Thm2-expansion", ..., "Remark-critical", "inconclusive".
std::string_view to_string(TheoremTag tag);
TheoremTag parse_theorem_tag(std::string_view name);
/// "finite-time-blowup", "global-expansion-bound", "inconclusive".
std::string_view to_string(Outcome outcome);

struct ClassifyInput {
  int N = 3;
  double gamma = 5.0 / 3.0;
  double beta = 0.0;
  double E0 = 0.0;
  double M = 1.0;
  double K = 1.0;
  double g = 1.0;
  /// Scale for the E = 0 test |E0| <= 1e-10 max(1, energy_scale).
  double energy_scale = 1.0;
  /// 2D: sup over the observed window of 2 int (rho u^2 + 2P).
  std::optional<double> sup_functional;
  /// 2D: gap g M^2 - sup_functional, if measured directly.
  std::optional<double> epsilon;
  /// 2D: the gap must exceed this margin (>= 0).
  double epsilon_margin = 0.0;
  /// |Omega| for the E = 0 expansion weighting and the Thm2-2b / Thm3-2 bounds.
  std::optional<double> domain_measure;
  /// When both are present, a blowup verdict carries its time bound.
  std::optional<double> H0;
  std::optional<double> Hdot0;
};

struct ExpansionBound {
  /// Lower bound on lim inf R(t) |Omega|^{weight_exponent} / t.
  double rate = 0.0;
  /// 0 for E > 0; (gamma - 1) / 2 for E = 0.
  double weight_exponent = 0.0;
  /// rate / |Omega|^{weight_exponent} when |Omega| was supplied.
  std::optional<double> unweighted_rate;
};

struct BlowupVerdict {
  TheoremTag tag = TheoremTag::inconclusive;
  Outcome outcome = Outcome::inconclusive;
  /// Blowup-time upper bound or expansion rate.
  std::optional<double> bound;
  std::optional<ExpansionBound> expansion;
  /// Hypothesis values as they were tested.
  std::vector<std::pair<std::string, double>> checked;
  std::string note;
};

double energy_zero_tolerance(double energy_scale);

/// Picks the first applicable statement: Thm1-2D (N = 2, beta = 0, gap >
/// margin); Remark-critical (N >= 4, gamma = 2(N-1)/N, E < 0); without damping
/// Thm2-expansion (N = 3, 4), Thm2-2a, Thm2-2b (N >= 4); with damping Thm3-1,
/// Thm3-2 (N >= 4); otherwise inconclusive. Throws InvalidInput on non-finite
/// input or an explicit epsilon <= 0 for N = 2.
BlowupVerdict classify_blowup(const ClassifyInput& in);

/// Expansion-rate bound for N in {3, 4}: sqrt((N-2) E / M) if E > 0 and
/// gamma >= 2(N-1)/N; sqrt((N gamma - 2(N-1)) K M^{gamma-1} / (gamma - 1)) if
/// E = 0 and gamma > 2(N-1)/N. Throws InvalidInput when no branch applies.
ExpansionBound expansion_bound(int N, double gamma, double E, double M, double K,
                               std::optional<double> domain_measure = std::nullopt,
                               double energy_scale = 1.0);

struct BoundParams {
  int N = 4;
  double gamma = 1.4;
  double K = 1.0;
  double M = 1.0;
  double E0 = 0.0;
  double beta = 0.0;
  double epsilon = 0.0;
  double domain_measure = 1.0;
};

/// Positive root of the upper bound on H(t) for each statement:
///   Thm1-2D:            H0 + Hdot0 t - (eps / 2) t^2
///   Thm2-2a (, remark): H0 + Hdot0 t + (N - 2) E0 t^2
///   Thm2-2b:            H0 + Hdot0 t + c |Omega|^{1-gamma} M^gamma t^2,
///                       c = (N gamma - 2(N-1)) K / (gamma - 1)
///   Thm3-1, Thm3-2 and the damped remark: C1 + C2 e^{-beta t} + b t with
///   b = 2 (N-2) E0 / beta (or 2 c |Omega|^{1-gamma} M^gamma / beta for
///   Thm3-2), C2 = (b - Hdot0) / beta, C1 = H0 - C2.
/// Throws InvalidInput if the bound has no positive root.
double blowup_time_bound(TheoremTag tag, double H0, double Hdot0, const BoundParams& p);

}  // namespace eplab
