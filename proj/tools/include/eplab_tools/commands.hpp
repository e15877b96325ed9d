#pragma once

#include <filesystem>
#include <iosfwd>

#include "eplab_tools/config.hpp"
#include "json.hpp"

namespace eplab::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitNumericalFailure = 2,
  kExitSupportHitBoundary = 3,
};

struct RunContext {
  std::filesystem::path out_root = "runs";
  unsigned seed = 0;
  unsigned threads = 1;
  /// Progress and result lines; may be null.
  std::ostream* log = nullptr;
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json termination;
};

/// Body of each command, writing its artifacts into run_dir.
CommandResult cmd_lane_emden(const ScenarioConfig& cfg, const std::filesystem::path& run_dir,
                             const RunContext& ctx);
CommandResult cmd_family(const ScenarioConfig& cfg, const std::filesystem::path& run_dir,
                         const RunContext& ctx);
CommandResult cmd_evolve(const ScenarioConfig& cfg, const std::filesystem::path& run_dir,
                         const RunContext& ctx);
CommandResult cmd_classify(const ScenarioConfig& cfg, const std::filesystem::path& run_dir,
                           const RunContext& ctx);
CommandResult cmd_sweep(const ScenarioConfig& cfg, const std::filesystem::path& run_dir,
                        const RunContext& ctx);
CommandResult cmd_verify(const ScenarioConfig& cfg, const std::filesystem::path& run_dir,
                         const RunContext& ctx);

/// Validates the config, prepares runs/<name>, writes the manifest before
/// the computation and finalizes it afterwards. Errors become exit codes:
/// InvalidInput 1, NumericalFailure 2, SupportHitBoundary 3.
int run_command(const ScenarioConfig& cfg, const RunContext& ctx);

}  // namespace eplab::tools
