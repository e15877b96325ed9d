#include "eplab/dimension.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eplab/errors.hpp"

namespace eplab {

DimensionConstants dimension_constants(int N) {
  if (N < 1) {
    throw InvalidInput("dimension_constants: N must be >= 1, got " + std::to_string(N));
  }
  DimensionConstants c;
  c.N = N;
  c.volume = std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N + 1.0);
  if (N == 1) {
    c.alpha = 2.0;
  } else if (N == 2) {
    c.alpha = 2.0 * std::numbers::pi;
  } else {
    c.alpha = N * (N - 2) * c.volume;
  }
  return c;
}

double unit_sphere_area(int N) { return N * dimension_constants(N).volume; }

double critical_gamma(int N) {
  if (N < 1) throw InvalidInput("critical_gamma: N must be >= 1");
  return 2.0 * (N - 1) / N;
}

}  // namespace eplab
