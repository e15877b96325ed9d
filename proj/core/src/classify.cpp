#include "eplab/classify.hpp"

#include <cmath>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"

namespace eplab {

namespace {

constexpr double kGammaTol = 1e-12;

enum class Sign { negative, zero, positive };

Sign energy_sign(double E, double scale) {
  const double tol = energy_zero_tolerance(scale);
  if (E < -tol) return Sign::negative;
  if (E > tol) return Sign::positive;
  return Sign::zero;
}

bool at_critical(double gamma, double gc) { return std::abs(gamma - gc) <= kGammaTol; }
bool below_critical(double gamma, double gc) { return gamma < gc - kGammaTol; }
bool at_or_below_critical(double gamma, double gc) { return gamma <= gc + kGammaTol; }
bool above_critical(double gamma, double gc) { return gamma > gc + kGammaTol; }

// Positive root of h0 + h1 t - (eps / 2) t^2 with eps > 0.
double quadratic_root(double h0, double h1, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("blowup_time_bound: bound is not eventually negative");
  if (h0 < 0.0) throw InvalidInput("blowup_time_bound: H0 must be >= 0");
  const double root_disc = std::sqrt(h1 * h1 + 2.0 * eps * h0);
  const double t = h1 >= 0.0 ? (h1 + root_disc) / eps : 2.0 * h0 / (root_disc - h1);
  if (!(t > 0.0)) throw InvalidInput("blowup_time_bound: no positive root (H0 = 0, Hdot0 <= 0)");
  return t;
}

double damped_root(double h0, double h1, double beta, double slope) {
  if (!(beta > 0.0)) throw InvalidInput("blowup_time_bound: damped bound needs beta > 0");
  if (!(slope < 0.0)) {
    throw InvalidInput("blowup_time_bound: damped bound has non-negative slope, no root");
  }
  if (h0 < 0.0) throw InvalidInput("blowup_time_bound: H0 must be >= 0");
  const double c2 = (slope - h1) / beta;
  const double c1 = h0 - c2;
  auto f = [&](double t) { return c1 + c2 * std::exp(-beta * t) + slope * t; };
  double lo = 0.0, hi = 1.0 / beta;
  int grow = 0;
  while (f(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 2000) throw NumericalFailure("blowup_time_bound: failed to bracket the root");
  }
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= 0.0 ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  if (!(t > 0.0)) throw InvalidInput("blowup_time_bound: no positive root");
  return t;
}

double holder_coefficient(const BoundParams& p) {
  const double c = (p.N * p.gamma - 2.0 * (p.N - 1)) * p.K / (p.gamma - 1.0);
  return c * std::pow(p.domain_measure, 1.0 - p.gamma) * std::pow(p.M, p.gamma);
}

}  // namespace

std::string_view to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::thm1_2d:
      return "Thm1-2D";
    case TheoremTag::thm2_expansion:
      return "Thm2-expansion";
    case TheoremTag::thm2_2a:
      return "Thm2-2a";
    case TheoremTag::thm2_2b:
      return "Thm2-2b";
    case TheoremTag::thm3_1:
      return "Thm3-1";
    case TheoremTag::thm3_2:
      return "Thm3-2";
    case TheoremTag::remark_critical:
      return "Remark-critical";
    case TheoremTag::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

TheoremTag parse_theorem_tag(std::string_view name) {
  for (TheoremTag t : {TheoremTag::thm1_2d, TheoremTag::thm2_expansion, TheoremTag::thm2_2a,
                       TheoremTag::thm2_2b, TheoremTag::thm3_1, TheoremTag::thm3_2,
                       TheoremTag::remark_critical, TheoremTag::inconclusive}) {
    if (to_string(t) == name) return t;
  }
  throw InvalidInput("unknown theorem tag '" + std::string(name) + "'");
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::finite_time_blowup:
      return "finite-time-blowup";
    case Outcome::global_expansion_bound:
      return "global-expansion-bound";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

double energy_zero_tolerance(double energy_scale) {
  return 1e-10 * std::max(1.0, std::abs(energy_scale));
}

ExpansionBound expansion_bound(int N, double gamma, double E, double M, double K,
                               std::optional<double> domain_measure, double energy_scale) {
  if (N != 3 && N != 4) throw InvalidInput("expansion_bound: stated for N = 3, 4 only");
  if (!(M > 0.0)) throw InvalidInput("expansion_bound: M must be > 0");
  const double gc = critical_gamma(N);
  const Sign s = energy_sign(E, energy_scale);
  ExpansionBound out;
  if (s == Sign::positive && gamma >= gc - kGammaTol) {
    out.rate = std::sqrt((N - 2.0) * E / M);
    out.unweighted_rate = out.rate;
    return out;
  }
  if (s == Sign::zero && above_critical(gamma, gc)) {
    if (!(K > 0.0)) throw InvalidInput("expansion_bound: K must be > 0");
    out.rate = std::sqrt((N * gamma - 2.0 * (N - 1)) * K * std::pow(M, gamma - 1.0) / (gamma - 1.0));
    out.weight_exponent = 0.5 * (gamma - 1.0);
    if (domain_measure) {
      if (!(*domain_measure > 0.0)) throw InvalidInput("expansion_bound: |Omega| must be > 0");
      out.unweighted_rate = out.rate / std::pow(*domain_measure, out.weight_exponent);
    }
    return out;
  }
  throw InvalidInput("expansion_bound: no branch applies (need E > 0 with gamma >= " +
                     std::to_string(gc) + ", or E = 0 with gamma > " + std::to_string(gc) + ")");
}

double blowup_time_bound(TheoremTag tag, double H0, double Hdot0, const BoundParams& p) {
  switch (tag) {
    case TheoremTag::thm1_2d:
      return quadratic_root(H0, Hdot0, p.epsilon);
    case TheoremTag::thm2_2a:
      return quadratic_root(H0, Hdot0, -2.0 * (p.N - 2.0) * p.E0);
    case TheoremTag::thm2_2b:
      return quadratic_root(H0, Hdot0, -2.0 * holder_coefficient(p));
    case TheoremTag::thm3_1:
      return damped_root(H0, Hdot0, p.beta, 2.0 * (p.N - 2.0) * p.E0 / p.beta);
    case TheoremTag::thm3_2:
      return damped_root(H0, Hdot0, p.beta, 2.0 * holder_coefficient(p) / p.beta);
    case TheoremTag::remark_critical:
      if (p.beta > 0.0) return damped_root(H0, Hdot0, p.beta, 2.0 * (p.N - 2.0) * p.E0 / p.beta);
      return quadratic_root(H0, Hdot0, -2.0 * (p.N - 2.0) * p.E0);
    case TheoremTag::thm2_expansion:
    case TheoremTag::inconclusive:
      break;
  }
  throw InvalidInput("blowup_time_bound: no blowup bound for tag " + std::string(to_string(tag)));
}

BlowupVerdict classify_blowup(const ClassifyInput& in) {
  for (double v : {in.gamma, in.beta, in.E0, in.M, in.K, in.g, in.energy_scale}) {
    if (!std::isfinite(v)) throw InvalidInput("classify_blowup: non-finite input");
  }
  if (in.N < 2) throw InvalidInput("classify_blowup: N must be >= 2");
  if (in.gamma < 1.0) throw InvalidInput("classify_blowup: gamma must be >= 1");
  if (in.beta < 0.0) throw InvalidInput("classify_blowup: beta must be >= 0");
  if (!(in.epsilon_margin >= 0.0)) throw InvalidInput("classify_blowup: margin must be >= 0");

  const int N = in.N;
  const double gc = critical_gamma(N);
  const double tol = energy_zero_tolerance(in.energy_scale);
  const Sign s = energy_sign(in.E0, in.energy_scale);

  BlowupVerdict v;
  v.checked = {{"N", N},           {"gamma", in.gamma},        {"gamma_critical", gc},
               {"beta", in.beta},  {"E0", in.E0},              {"E_zero_tolerance", tol},
               {"M", in.M}};

  auto blowup = [&](TheoremTag tag, std::string note) {
    v.tag = tag;
    v.outcome = Outcome::finite_time_blowup;
    v.note = std::move(note);
  };

  if (N == 2) {
    std::optional<double> eps = in.epsilon;
    if (in.epsilon && *in.epsilon <= 0.0) {
      throw InvalidInput("classify_blowup: epsilon <= 0 supplied for the 2D branch");
    }
    if (!eps && in.sup_functional) eps = in.g * in.M * in.M - *in.sup_functional;
    if (in.sup_functional) v.checked.emplace_back("sup_functional", *in.sup_functional);
    v.checked.emplace_back("gM2", in.g * in.M * in.M);
    v.checked.emplace_back("epsilon_margin", in.epsilon_margin);
    if (eps) v.checked.emplace_back("epsilon", *eps);
    if (in.beta != 0.0) {
      v.note = "2D statement assumes no damping";
    } else if (!eps) {
      v.note = "2D statement needs the measured gap g M^2 - sup 2 int (rho u^2 + 2P)";
    } else if (!(*eps > in.epsilon_margin)) {
      v.note = "measured gap does not exceed the margin";
    } else {
      blowup(TheoremTag::thm1_2d, "uniform gap g M^2 - 2 int (rho u^2 + 2P) > 0 observed");
    }
  } else {
    const bool damped = in.beta > 0.0;
    const bool polytropic = in.gamma > 1.0;
    if (N >= 4 && polytropic && at_critical(in.gamma, gc) && s == Sign::negative) {
      blowup(TheoremTag::remark_critical, "critical gamma with negative energy");
    } else if (!damped) {
      if ((N == 3 || N == 4) && s == Sign::positive && in.gamma >= gc - kGammaTol) {
        v.tag = TheoremTag::thm2_expansion;
        v.outcome = Outcome::global_expansion_bound;
        v.expansion = expansion_bound(N, in.gamma, in.E0, in.M, in.K, in.domain_measure,
                                      in.energy_scale);
        v.bound = v.expansion->rate;
        v.note = "lim inf R(t)/t >= sqrt((N-2) E / M) for global solutions";
      } else if ((N == 3 || N == 4) && s == Sign::zero && above_critical(in.gamma, gc)) {
        v.tag = TheoremTag::thm2_expansion;
        v.outcome = Outcome::global_expansion_bound;
        v.expansion = expansion_bound(N, in.gamma, in.E0, in.M, in.K, in.domain_measure,
                                      in.energy_scale);
        v.bound = v.expansion->rate;
        v.note = "rate bounds lim inf R(t) |Omega|^{(gamma-1)/2} / t";
      } else if (N >= 4 && polytropic && at_or_below_critical(in.gamma, gc) &&
                 s == Sign::negative) {
        blowup(TheoremTag::thm2_2a, "1 < gamma <= 2(N-1)/N and E < 0");
      } else if (N >= 4 && polytropic && below_critical(in.gamma, gc) && s == Sign::zero) {
        blowup(TheoremTag::thm2_2b, "1 < gamma < 2(N-1)/N and E = 0");
      }
    } else {
      if (N >= 4 && polytropic && at_or_below_critical(in.gamma, gc) && s == Sign::negative) {
        blowup(TheoremTag::thm3_1, "damped, 1 < gamma <= 2(N-1)/N and E(0) < 0");
      } else if (N >= 4 && polytropic && below_critical(in.gamma, gc) && s == Sign::zero) {
        blowup(TheoremTag::thm3_2, "damped, 1 < gamma < 2(N-1)/N and E(0) = 0");
      }
    }
    if (v.tag == TheoremTag::inconclusive) v.note = "no stated hypothesis set matches";
  }

  if (v.outcome == Outcome::finite_time_blowup && in.H0 && in.Hdot0) {
    BoundParams p;
    p.N = N;
    p.gamma = in.gamma;
    p.K = in.K;
    p.M = in.M;
    p.E0 = in.E0;
    p.beta = in.beta;
    if (N == 2) p.epsilon = in.epsilon.value_or(in.g * in.M * in.M - in.sup_functional.value_or(0));
    const bool needs_measure = v.tag == TheoremTag::thm2_2b || v.tag == TheoremTag::thm3_2;
    if (needs_measure && !in.domain_measure) {
      v.note += "; time bound needs the domain measure";
    } else {
      p.domain_measure = in.domain_measure.value_or(1.0);
      try {
        v.bound = blowup_time_bound(v.tag, *in.H0, *in.Hdot0, p);
      } catch (const InvalidInput& e) {
        v.note += std::string("; time bound vacuous: ") + e.what();
      }
    }
    v.checked.emplace_back("H0", *in.H0);
    v.checked.emplace_back("Hdot0", *in.Hdot0);
  }
  if (in.domain_measure) v.checked.emplace_back("domain_measure", *in.domain_measure);
  return v;
}

}  // namespace eplab
