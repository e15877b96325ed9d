#include "eplab_tools/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "eplab/dimension.hpp"
#include "eplab_tools/scenarios.hpp"

namespace eplab::tools {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::vector<DiagnosticsRow> diagnostics_rows(const EvolveResult& result) {
  std::vector<VirialSample> virial;
  for (const auto& s : result.snapshots) virial.push_back(s.virial);
  if (virial.size() >= 3) virial = virial_series(std::move(virial));
  std::vector<DiagnosticsRow> rows;
  for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
    const auto& s = result.snapshots[k];
    rows.push_back({s.energy, virial[k], total_mass(s.state), s.support_radius});
  }
  const auto& f = result.final;
  if (result.snapshots.empty() || f.state.t > result.snapshots.back().state.t) {
    rows.push_back({f.energy, f.virial, total_mass(f.state), f.support_radius});
  }
  return rows;
}

EvolutionOutcome run_evolution(const EvolveJob& job,
                               std::function<void(const Snapshot&)> on_snapshot) {
  EvolutionOutcome out;
  out.initial = initial_state(job);
  const bool at_rest = std::all_of(out.initial.u.begin(), out.initial.u.end(),
                                   [](double u) { return u == 0.0; });
  if (at_rest) {
    out.stationary = stationary_identities(out.initial);
    out.hydrostatic_residual = hydrostatic_residual(out.initial);
  }

  EvolveOptions opts = job.evolve;
  opts.on_snapshot = std::move(on_snapshot);
  out.result = evolve(out.initial, opts);
  out.diagnostics = diagnostics_rows(out.result);

  const Snapshot& s0 = out.result.snapshots.front();
  auto& in = out.input;
  in.N = job.phys.N;
  in.gamma = job.phys.gamma;
  in.beta = job.phys.beta;
  in.K = job.phys.K;
  in.g = job.phys.g;
  in.E0 = s0.energy.total;
  in.energy_scale = s0.energy.scale();
  in.M = total_mass(out.initial);
  in.H0 = s0.virial.H;
  in.Hdot0 = s0.virial.Hdot_formula;
  in.epsilon_margin = job.epsilon_margin;
  in.domain_measure = job.domain_measure.value_or(dimension_constants(job.phys.N).volume *
                                                  std::pow(out.initial.grid.r_max(), job.phys.N));
  if (job.phys.N == 2) {
    double sup = out.result.final.gap_functional;
    for (const auto& s : out.result.snapshots) sup = std::max(sup, s.gap_functional);
    in.sup_functional = sup;
  }
  out.verdict = classify_blowup(in);
  return out;
}

nlohmann::json to_json(const BlowupVerdict& v) {
  nlohmann::json j;
  j["theorem_tag"] = std::string(to_string(v.tag));
  j["outcome"] = std::string(to_string(v.outcome));
  j["bound"] = optional_number(v.bound);
  if (v.expansion) {
    j["expansion"] = {{"rate", v.expansion->rate},
                      {"weight_exponent", v.expansion->weight_exponent},
                      {"unweighted_rate", optional_number(v.expansion->unweighted_rate)}};
  } else {
    j["expansion"] = nullptr;
  }
  nlohmann::json checked = nlohmann::json::array();
  for (const auto& [name, value] : v.checked) checked.push_back({{"name", name}, {"value", value}});
  j["checked"] = checked;
  j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const ClassifyInput& in) {
  return {{"N", in.N},
          {"gamma", in.gamma},
          {"beta", in.beta},
          {"E0", in.E0},
          {"M", in.M},
          {"K", in.K},
          {"g", in.g},
          {"energy_scale", in.energy_scale},
          {"sup_functional", optional_number(in.sup_functional)},
          {"epsilon", optional_number(in.epsilon)},
          {"epsilon_margin", in.epsilon_margin},
          {"domain_measure", optional_number(in.domain_measure)},
          {"H0", optional_number(in.H0)},
          {"Hdot0", optional_number(in.Hdot0)}};
}

nlohmann::json to_json(const StationaryReport& rep) {
  return {{"identity", rep.identity}, {"lhs", rep.lhs},           {"rhs", rep.rhs},
          {"mismatch", rep.mismatch}, {"max_speed", rep.max_speed}, {"moving", rep.moving}};
}

}  // namespace eplab::tools
