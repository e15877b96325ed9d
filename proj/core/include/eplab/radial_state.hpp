#pragma once

#include <cstddef>
#include <vector>

namespace eplab {

struct Physics {
  int N = 3;
  double gamma = 5.0 / 3.0;
  double K = 1.0;
  double g = 1.0;
  double beta = 0.0;

  double pressure(double rho) const;
  double sound_speed(double rho) const;
};

/// Throws InvalidInput unless N >= 2, gamma >= 1, K > 0, g > 0, beta >= 0.
void validate(const Physics& phys);

/// Uniform cell-centred grid on [0, r_max]. Volumes and face areas are per
/// unit solid angle: V_i = (r_{i+1/2}^N - r_{i-1/2}^N) / N, A = r^{N-1}.
class RadialGrid {
 public:
  RadialGrid() = default;
  RadialGrid(int N, double r_max, std::size_t cells);

  int dimension() const { return N_; }
  double r_max() const { return r_max_; }
  std::size_t size() const { return centers_.size(); }
  double dr() const { return dr_; }

  double center(std::size_t i) const { return centers_[i]; }
  double face(std::size_t i) const { return faces_[i]; }
  double volume(std::size_t i) const { return volumes_[i]; }
  double area(std::size_t face_index) const { return areas_[face_index]; }
  const std::vector<double>& centers() const { return centers_; }

 private:
  int N_ = 3;
  double r_max_ = 0.0;
  double dr_ = 0.0;
  std::vector<double> centers_;
  std::vector<double> faces_;
  std::vector<double> volumes_;
  std::vector<double> areas_;
};

struct RadialState {
  Physics phys;
  RadialGrid grid;
  std::vector<double> rho;
  std::vector<double> u;
  double t = 0.0;
  /// Vacuum threshold; cells with rho below it count as empty.
  double floor = 0.0;

  std::size_t size() const { return rho.size(); }
  double max_density() const;
  /// Sets floor = 1e-14 * max rho.
  void reset_floor();
};

/// Zero-initialised state on a fresh grid, floor unset.
RadialState make_state(const Physics& phys, double r_max, std::size_t cells);

/// Throws InvalidInput on mismatched sizes, non-finite or negative densities.
void validate(const RadialState& state);

struct GravityField {
  std::vector<double> phi_r;
  std::vector<double> phi;
};

/// int_0^{r_i} rho s^{N-1} ds for piecewise-constant rho, at each cell centre.
std::vector<double> enclosed_integral(const RadialState& state);

/// Phi_r = alpha(N) g I(r) / r^{N-1} at cell centres. Phi is the exact ring
/// potential of the piecewise-constant density,
///   Phi(r) = g N V(N) int rho(s) s^{N-1} k(max(r, s)) ds,
/// with k(x) = -x^{2-N} (N >= 3, Phi -> 0 at infinity) or ln x (N = 2).
GravityField poisson_radial(const RadialState& state);

/// Only Phi_r, for the hydro stages.
std::vector<double> gravity_acceleration(const RadialState& state);

/// Support radius: largest cell centre with rho > floor, or 0 for vacuum.
double support_radius(const RadialState& state);

}  // namespace eplab
