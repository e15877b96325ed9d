#include "eplab/kernel.hpp"

#include <cmath>

#include "eplab/errors.hpp"

namespace eplab {

namespace {

// s^p (ln s / p - 1 / p^2), an antiderivative of s^{p-1} ln s vanishing at 0.
double log_antiderivative(double s, double p) {
  if (s <= 0.0) return 0.0;
  return std::pow(s, p) * (std::log(s) / p - 1.0 / (p * p));
}

}  // namespace

double ring_kernel(int N, double x) {
  if (N < 2) throw InvalidInput("ring_kernel: N must be >= 2");
  if (N == 2) return std::log(x);
  return -std::pow(x, 2.0 - N);
}

double kernel_moment(int N, double a, double b) {
  if (N < 2) throw InvalidInput("kernel_moment: N must be >= 2");
  if (N == 2) return log_antiderivative(b, 2.0) - log_antiderivative(a, 2.0);
  return -0.5 * (b - a) * (b + a);
}

double kernel_moment_high(int N, double a, double b) {
  if (N < 2) throw InvalidInput("kernel_moment_high: N must be >= 2");
  if (N == 2) return log_antiderivative(b, 4.0) - log_antiderivative(a, 4.0);
  return -(std::pow(b, N + 2) - std::pow(a, N + 2)) / (N + 2);
}

}  // namespace eplab
