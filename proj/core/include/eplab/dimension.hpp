#pragma once

namespace eplab {

/// Geometry constants of R^N entering the Poisson equation
///   Laplacian(Phi) = alpha(N) g rho.
struct DimensionConstants {
  int N = 3;
  double volume = 0.0;  ///< volume of the unit ball
  double alpha = 0.0;   ///< Poisson normalisation
};

/// alpha(1) = 2, alpha(2) = 2 pi, alpha(N) = N (N - 2) V(N) for N >= 3, with
/// V(N) = pi^{N/2} / Gamma(N/2 + 1). Throws InvalidInput for N < 1.
DimensionConstants dimension_constants(int N);

/// Surface area of the unit sphere, N V(N). Radial integrals
/// int f dx = unit_sphere_area(N) * int f(r) r^{N-1} dr.
double unit_sphere_area(int N);

/// Critical exponent 2(N-1)/N separating the blowup and expansion regimes.
double critical_gamma(int N);

}  // namespace eplab
