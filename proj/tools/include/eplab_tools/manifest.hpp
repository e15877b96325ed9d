#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "eplab_tools/config.hpp"

namespace eplab::tools {

inline constexpr const char* kToolVersion = "0.1.0";

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Writes the JSON atomically (temporary file, then rename).
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& doc);

/// Deterministic JSON text (sorted keys, 2-space indent, trailing newline).
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

/// runs/<name>/manifest.json. begin() records the config and start time
/// before any computation; finish() adds the termination record and the
/// inventory of every other file under the run directory.
class RunManifest {
 public:
  RunManifest(std::filesystem::path run_dir, const ScenarioConfig& cfg, unsigned seed);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path() const { return dir_ / "manifest.json"; }

  void begin();
  void finish(const std::string& status, int exit_code, const nlohmann::json& termination);

 private:
  std::filesystem::path dir_;
  nlohmann::json doc_;
};

/// Creates runs/<name>; a previous run directory (one holding a manifest) is
/// replaced, any other non-empty directory is refused.
std::filesystem::path prepare_run_dir(const std::filesystem::path& out_root,
                                      const std::string& name);

}  // namespace eplab::tools
