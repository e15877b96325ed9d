#pragma once

namespace eplab {

/// Angular mean of the Green's kernel over a sphere of radius s, seen from
/// radius r, is k(max(r, s)) with k(x) = ln x (N = 2) or -x^{2-N} (N >= 3).
double ring_kernel(int N, double x);

/// int_a^b s^{N-1} k(s) ds.
double kernel_moment(int N, double a, double b);

/// int_a^b s^{2N-1} k(s) ds.
double kernel_moment_high(int N, double a, double b);

}  // namespace eplab
