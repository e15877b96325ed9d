#include "eplab/io.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "eplab/errors.hpp"

namespace eplab {

namespace {

constexpr std::array<char, 8> kMagic = {'E', 'P', 'L', 'C', 'H', 'K', '0', '1'};

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ofstream out(path, std::ios::out | std::ios::trunc | mode);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

template <typename T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::istream& in, const std::filesystem::path& path) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw InvalidInput("truncated checkpoint " + path.string());
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_profile_csv(const std::filesystem::path& path, const PolytropeProfile& profile) {
  auto out = open_out(path);
  out << "z,y,dy\n";
  for (const auto& s : profile.samples) {
    out << format_double(s.z) << ',' << format_double(s.y) << ',' << format_double(s.dy) << '\n';
  }
}

void write_trajectory_csv(const std::filesystem::path& path, const ScaleTrajectory& traj) {
  auto out = open_out(path);
  out << "t,a,adot\n";
  for (const auto& s : traj.samples) {
    out << format_double(s.t) << ',' << format_double(s.a) << ',' << format_double(s.adot)
        << '\n';
  }
}

void write_snapshot_csv(const std::filesystem::path& path, const RadialState& state) {
  const std::vector<double> phi_r = gravity_acceleration(state);
  auto out = open_out(path);
  out << "r,rho,u,phi_r\n";
  for (std::size_t i = 0; i < state.size(); ++i) {
    out << format_double(state.grid.center(i)) << ',' << format_double(state.rho[i]) << ','
        << format_double(state.u[i]) << ',' << format_double(phi_r[i]) << '\n';
  }
}

void write_diagnostics_csv(const std::filesystem::path& path,
                           const std::vector<DiagnosticsRow>& rows) {
  auto out = open_out(path);
  out << "t,M,E_kin,E_int,E_pot,E_tot,H,Hdot_f,Hddot_f,Hdot_m,Hddot_m,R_support\n";
  for (const auto& r : rows) {
    const auto& e = r.energy;
    const auto& v = r.virial;
    out << format_double(v.t) << ',' << format_double(r.mass) << ',' << format_double(e.kinetic)
        << ',' << format_double(e.internal) << ',' << format_double(e.potential) << ','
        << format_double(e.total) << ',' << format_double(v.H) << ','
        << format_double(v.Hdot_formula) << ',' << format_double(v.Hddot_formula) << ',';
    if (v.measured) {
      out << format_double(v.Hdot_measured) << ',' << format_double(v.Hddot_measured);
    } else {
      out << ',';
    }
    out << ',' << format_double(r.support_radius) << '\n';
  }
}

void save_checkpoint(const std::filesystem::path& path, const RadialState& state) {
  validate(state);
  auto out = open_out(path, std::ios::binary);
  out.write(kMagic.data(), kMagic.size());
  put<std::int32_t>(out, state.phys.N);
  put(out, state.phys.gamma);
  put(out, state.phys.K);
  put(out, state.phys.g);
  put(out, state.phys.beta);
  put(out, state.grid.r_max());
  put<std::uint64_t>(out, state.size());
  put(out, state.t);
  put(out, state.floor);
  out.write(reinterpret_cast<const char*>(state.rho.data()),
            static_cast<std::streamsize>(state.size() * sizeof(double)));
  out.write(reinterpret_cast<const char*>(state.u.data()),
            static_cast<std::streamsize>(state.size() * sizeof(double)));
  if (!out) throw std::runtime_error("failed writing checkpoint " + path.string());
}

RadialState load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open checkpoint " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw InvalidInput("not a checkpoint file: " + path.string());
  Physics phys;
  phys.N = take<std::int32_t>(in, path);
  phys.gamma = take<double>(in, path);
  phys.K = take<double>(in, path);
  phys.g = take<double>(in, path);
  phys.beta = take<double>(in, path);
  const double r_max = take<double>(in, path);
  const auto cells = take<std::uint64_t>(in, path);
  if (cells < 4 || cells > (std::uint64_t{1} << 32)) {
    throw InvalidInput("implausible cell count in checkpoint " + path.string());
  }
  RadialState state = make_state(phys, r_max, static_cast<std::size_t>(cells));
  state.t = take<double>(in, path);
  state.floor = take<double>(in, path);
  in.read(reinterpret_cast<char*>(state.rho.data()),
          static_cast<std::streamsize>(cells * sizeof(double)));
  in.read(reinterpret_cast<char*>(state.u.data()),
          static_cast<std::streamsize>(cells * sizeof(double)));
  if (!in) throw InvalidInput("truncated checkpoint " + path.string());
  validate(state);
  return state;
}

}  // namespace eplab
