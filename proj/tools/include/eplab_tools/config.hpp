#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eplab::tools {

enum class Command { lane_emden, family, evolve, classify, sweep, verify };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

enum class ValueKind { number, integer, text, flag, number_list, text_list };

struct KeySpec {
  std::string section;
  std::string key;
  ValueKind kind = ValueKind::number;
  /// Empty means "unset" for optional keys.
  std::string default_value;
};

/// Sections and keys accepted by a command, with defaults.
const std::vector<KeySpec>& schema(Command c);

/// Sectioned key = value settings for one command. Every schema key is
/// present (defaults filled in), so two configs compare equal exactly when
/// they describe the same run.
class ScenarioConfig {
 public:
  explicit ScenarioConfig(Command c);

  /// INI text; unknown sections or keys and malformed values throw
  /// InvalidInput naming the key.
  static ScenarioConfig parse(Command c, std::string_view ini_text);
  static ScenarioConfig load(Command c, const std::filesystem::path& path);

  Command command() const { return command_; }

  /// Override one value ("section.key"); same checks as parse.
  void set(std::string_view dotted_key, std::string value);
  void set(const std::string& section, const std::string& key, std::string value);

  bool has(const std::string& section, const std::string& key) const;
  const std::string& text(const std::string& section, const std::string& key) const;
  double number(const std::string& section, const std::string& key) const;
  std::optional<double> maybe_number(const std::string& section, const std::string& key) const;
  long integer(const std::string& section, const std::string& key) const;
  bool flag(const std::string& section, const std::string& key) const;
  std::vector<double> numbers(const std::string& section, const std::string& key) const;
  std::vector<std::string> texts(const std::string& section, const std::string& key) const;

  /// Canonical INI text: sections and keys in schema order, every key listed.
  std::string to_ini() const;
  const std::map<std::string, std::map<std::string, std::string>>& entries() const {
    return entries_;
  }

  friend bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return a.command_ == b.command_ && a.entries_ == b.entries_;
  }

 private:
  const KeySpec& spec(const std::string& section, const std::string& key) const;

  Command command_;
  std::map<std::string, std::map<std::string, std::string>> entries_;
};

/// "a, b ,c" -> {"a", "b", "c"}; empty input gives an empty list.
std::vector<std::string> split_list(std::string_view text);

}  // namespace eplab::tools
