#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eplab/diagnostics.hpp"
#include "eplab/polytrope.hpp"
#include "eplab/radial_state.hpp"
#include "eplab/scale_factor.hpp"

namespace eplab {

/// Shortest round-trip decimal form of x ("%.17g").
std::string format_double(double x);

/// `z,y,dy`
void write_profile_csv(const std::filesystem::path& path, const PolytropeProfile& profile);
/// `t,a,adot`
void write_trajectory_csv(const std::filesystem::path& path, const ScaleTrajectory& traj);
/// `r,rho,u,phi_r`
void write_snapshot_csv(const std::filesystem::path& path, const RadialState& state);

struct DiagnosticsRow {
  EnergyBreakdown energy;
  VirialSample virial;
  double mass = 0.0;
  double support_radius = 0.0;
};

/// `t,M,E_kin,E_int,E_pot,E_tot,H,Hdot_f,Hddot_f,Hdot_m,Hddot_m,R_support`;
/// measured columns are empty when not filled in.
void write_diagnostics_csv(const std::filesystem::path& path,
                           const std::vector<DiagnosticsRow>& rows);

/// Binary checkpoint of the full state; load(save(s)) reproduces s bit for bit.
void save_checkpoint(const std::filesystem::path& path, const RadialState& state);
RadialState load_checkpoint(const std::filesystem::path& path);

}  // namespace eplab
