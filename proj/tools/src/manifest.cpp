#include "eplab_tools/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>
#include <vector>

#include "eplab/errors.hpp"

namespace eplab::tools {

namespace fs = std::filesystem;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

}  // namespace

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw NumericalFailure("sha256: digest initialisation failed");
  }
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

void write_json(const fs::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw InvalidInput("write failed for " + path.string());
}

void write_json_atomic(const fs::path& path, const nlohmann::json& doc) {
  fs::path tmp = path;
  tmp += ".tmp";
  write_json(tmp, doc);
  fs::rename(tmp, path);
}

RunManifest::RunManifest(fs::path run_dir, const ScenarioConfig& cfg, unsigned seed)
    : dir_(std::move(run_dir)) {
  doc_["tool"] = "eplab";
  doc_["version"] = kToolVersion;
  doc_["command"] = std::string(to_string(cfg.command()));
  doc_["seed"] = seed;
  doc_["config"] = cfg.entries();
  doc_["config_ini"] = cfg.to_ini();
}

void RunManifest::begin() {
  doc_["started_at"] = utc_now();
  doc_["status"] = "running";
  write_json_atomic(path(), doc_);
}

void RunManifest::finish(const std::string& status, int exit_code,
                         const nlohmann::json& termination) {
  doc_["finished_at"] = utc_now();
  doc_["status"] = status;
  doc_["exit_code"] = exit_code;
  doc_["termination"] = termination;
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), dir_);
    if (rel == "manifest.json" || rel == "manifest.json.tmp") continue;
    files.push_back(rel);
  }
  std::sort(files.begin(), files.end());
  nlohmann::json inventory = nlohmann::json::array();
  for (const auto& rel : files) {
    inventory.push_back({{"path", rel.generic_string()},
                         {"bytes", fs::file_size(dir_ / rel)},
                         {"sha256", sha256_file(dir_ / rel)}});
  }
  doc_["files"] = inventory;
  write_json_atomic(path(), doc_);
}

fs::path prepare_run_dir(const fs::path& out_root, const std::string& name) {
  if (name.empty() || name.find('/') != std::string::npos || name == "." || name == "..") {
    throw InvalidInput("run.name: must be a plain directory name");
  }
  const fs::path dir = out_root / name;
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) throw InvalidInput(dir.string() + " exists and is not a directory");
    if (!fs::is_empty(dir)) {
      if (!fs::exists(dir / "manifest.json")) {
        throw InvalidInput(dir.string() + " is not empty and holds no run manifest; refusing to overwrite");
      }
      fs::remove_all(dir);
    }
  }
  fs::create_directories(dir);
  return dir;
}

}  // namespace eplab::tools
