#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eplab/classify.hpp"
#include "eplab/family.hpp"
#include "eplab/hydro.hpp"
#include "eplab/polytrope.hpp"
#include "eplab/radial_state.hpp"
#include "eplab_tools/config.hpp"

namespace eplab::tools {

struct LaneEmdenJob {
  ProfileSpec spec;
  IntegrationOptions options;
};

struct ResidualPlan {
  std::vector<double> times;
  double dr = 0.04;
  double dt = 0.04;
  int levels = 3;
  std::size_t points = 200;
  /// Fraction of the support a(t) Z sampled for the power kind.
  double extent = 0.9;
  /// Sampled radius for the isothermal kind.
  double radius = 10.0;
};

struct FamilyJob {
  FamilyParams params;
  ResidualPlan residual;
};

enum class InitialProfile { polytrope, stationary65, family, concentrated, uniform, checkpoint };

std::string_view to_string(InitialProfile p);
InitialProfile parse_initial_profile(std::string_view name);

struct InitialSpec {
  InitialProfile profile = InitialProfile::polytrope;
  double rho_c = 1.0;
  double radius = 1.0;
  double core_radius = 1.0;
  double A = 1.0;
  double truncate = 20.0;
  double velocity_slope = 0.0;
  std::filesystem::path checkpoint;
  FamilyParams family;
};

struct EvolveJob {
  Physics phys;
  double r_max = 2.0;
  std::size_t cells = 2048;
  EvolveOptions evolve;
  InitialSpec initial;
  double epsilon_margin = 0.0;
  std::optional<double> domain_measure;
  bool write_snapshots = true;
  bool write_checkpoint = true;
};

struct ClassifyJob {
  ClassifyInput input;
};

enum class EnergySign { negative, zero, positive };

std::string_view to_string(EnergySign s);

struct SweepCase {
  /// Absent: the critical exponent 2(N-1)/N of each cell.
  std::optional<double> gamma;
  EnergySign energy = EnergySign::negative;
};

struct SweepJob {
  std::vector<int> dimensions;
  std::vector<double> betas;
  std::vector<SweepCase> cases;
  double energy_magnitude = 1.0;
  double M = 1.0;
  double K = 1.0;
  double g = 1.0;
  double domain_measure = 1.0;
  double H0 = 1.0;
  double Hdot0 = 0.0;
};

struct SweepCell {
  int N = 3;
  double beta = 0.0;
  double gamma = 1.2;
  bool critical = false;
  EnergySign energy = EnergySign::negative;
};

/// Builders check every physical precondition and report the offending key.
LaneEmdenJob lane_emden_job(const ScenarioConfig& cfg);
FamilyJob family_job(const ScenarioConfig& cfg);
EvolveJob evolve_job(const ScenarioConfig& cfg);
ClassifyJob classify_job(const ScenarioConfig& cfg);
SweepJob sweep_job(const ScenarioConfig& cfg);
std::vector<int> verify_criteria(const ScenarioConfig& cfg);

/// Row-major over N, beta, case. Throws InvalidInput on an empty grid.
std::vector<SweepCell> sweep_cells(const SweepJob& job);
ClassifyInput sweep_input(const SweepJob& job, const SweepCell& cell);

}  // namespace eplab::tools
