#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eplab/classify.hpp"
#include "eplab/diagnostics.hpp"
#include "eplab/hydro.hpp"
#include "eplab/io.hpp"
#include "eplab_tools/jobs.hpp"
#include "json.hpp"

namespace eplab::tools {

struct EvolutionOutcome {
  RadialState initial;
  EvolveResult result;
  ClassifyInput input;
  BlowupVerdict verdict;
  /// Present when the initial velocity vanishes identically.
  std::optional<StationaryReport> stationary;
  std::optional<double> hydrostatic_residual;
  std::vector<DiagnosticsRow> diagnostics;
};

/// Evolves the job's initial data and classifies it with the measured E(0),
/// M, H(0), H'(0) and, in 2D, the largest gap functional seen over the
/// snapshots and the final state.
EvolutionOutcome run_evolution(const EvolveJob& job,
                               std::function<void(const Snapshot&)> on_snapshot = {});

/// Diagnostics rows for the snapshots, with measured derivatives when there
/// are at least three, plus the final state if it lies past the last one.
std::vector<DiagnosticsRow> diagnostics_rows(const EvolveResult& result);

nlohmann::json to_json(const BlowupVerdict& v);
nlohmann::json to_json(const ClassifyInput& in);
nlohmann::json to_json(const StationaryReport& rep);

}  // namespace eplab::tools
