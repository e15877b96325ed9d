#include "eplab_tools/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "eplab/errors.hpp"

namespace eplab::tools {

namespace {

using V = ValueKind;

std::vector<KeySpec> with_run_name(Command c, std::vector<KeySpec> keys) {
  keys.insert(keys.begin(), KeySpec{"run", "name", V::text, std::string(to_string(c))});
  return keys;
}

std::vector<KeySpec> similarity_keys(bool residuals) {
  std::vector<KeySpec> k = {
      {"similarity", "kind", V::text, "power"},
      {"similarity", "N", V::integer, "3"},
      {"similarity", "K", V::number, "3.141592653589793"},
      {"similarity", "g", V::number, "1"},
      {"similarity", "lambda", V::number, "0.1"},
      {"similarity", "mu", V::number, ""},
      {"similarity", "alpha", V::number, "2"},
      {"similarity", "a0", V::number, "1"},
      {"similarity", "a1", V::number, "-0.2"},
      {"similarity", "t_end", V::number, "3"},
      {"similarity", "dt", V::number, "0.001"},
      {"similarity", "z_max", V::number, "50"},
      {"similarity", "h", V::number, "0.0001"},
      {"similarity", "store_every", V::integer, "10"},
  };
  if (residuals) {
    std::vector<KeySpec> r = {
        {"similarity", "residual_times", V::number_list, "0.3"},
        {"similarity", "residual_dr", V::number, "0.04"},
        {"similarity", "residual_dt", V::number, "0.04"},
        {"similarity", "residual_levels", V::integer, "3"},
        {"similarity", "residual_points", V::integer, "200"},
        {"similarity", "residual_extent", V::number, "0.9"},
        {"similarity", "residual_radius", V::number, "10"},
    };
    k.insert(k.end(), r.begin(), r.end());
  }
  return k;
}

std::vector<KeySpec> build_schema(Command c) {
  switch (c) {
    case Command::lane_emden:
      return with_run_name(c, {
                                  {"polytrope", "kind", V::text, "classic"},
                                  {"polytrope", "n", V::number, "1"},
                                  {"polytrope", "alpha", V::number, "1"},
                                  {"polytrope", "N", V::integer, "3"},
                                  {"polytrope", "mu", V::number, "0"},
                                  {"polytrope", "K", V::number, "1"},
                                  {"polytrope", "g", V::number, "1"},
                                  {"polytrope", "z_max", V::number, "50"},
                                  {"polytrope", "h", V::number, "0.0001"},
                                  {"polytrope", "store_every", V::integer, "100"},
                              });
    case Command::family:
      return with_run_name(c, similarity_keys(true));
    case Command::evolve: {
      std::vector<KeySpec> k = {
          {"hydro", "N", V::integer, "3"},
          {"hydro", "gamma", V::number, "1.6666666666666667"},
          {"hydro", "K", V::number, "1"},
          {"hydro", "g", V::number, "1"},
          {"hydro", "beta", V::number, "0"},
          {"hydro", "r_max", V::number, "2"},
          {"hydro", "cells", V::integer, "2048"},
          {"hydro", "cfl", V::number, "0.4"},
          {"hydro", "t_end", V::number, "1"},
          {"hydro", "snapshot_every", V::number, "0.02"},
          {"hydro", "reconstruction", V::text, "muscl"},
          {"hydro", "limiter", V::text, "mc"},
          {"hydro", "gravity", V::flag, "true"},
          {"hydro", "pressure", V::flag, "true"},
          {"hydro", "collapse_factor", V::number, "1000"},
          {"hydro", "tv_growth_factor", V::number, "10"},
          {"hydro", "max_steps", V::integer, "20000000"},
          {"initial", "profile", V::text, "polytrope"},
          {"initial", "rho_c", V::number, "1"},
          {"initial", "radius", V::number, "1"},
          {"initial", "core_radius", V::number, "1"},
          {"initial", "A", V::number, "1"},
          {"initial", "truncate", V::number, "20"},
          {"initial", "velocity_slope", V::number, "0"},
          {"initial", "checkpoint", V::text, ""},
          {"diagnostics", "epsilon_margin", V::number, "0"},
          {"diagnostics", "domain_measure", V::number, ""},
          {"output", "snapshots", V::flag, "true"},
          {"output", "checkpoint", V::flag, "true"},
      };
      auto sim = similarity_keys(false);
      k.insert(k.end(), sim.begin(), sim.end());
      return with_run_name(c, std::move(k));
    }
    case Command::classify:
      return with_run_name(c, {
                                  {"diagnostics", "N", V::integer, "4"},
                                  {"diagnostics", "gamma", V::number, "1.4"},
                                  {"diagnostics", "beta", V::number, "0"},
                                  {"diagnostics", "E0", V::number, "-1"},
                                  {"diagnostics", "M", V::number, "1"},
                                  {"diagnostics", "K", V::number, "1"},
                                  {"diagnostics", "g", V::number, "1"},
                                  {"diagnostics", "energy_scale", V::number, "1"},
                                  {"diagnostics", "sup_functional", V::number, ""},
                                  {"diagnostics", "epsilon", V::number, ""},
                                  {"diagnostics", "epsilon_margin", V::number, "0"},
                                  {"diagnostics", "domain_measure", V::number, ""},
                                  {"diagnostics", "H0", V::number, ""},
                                  {"diagnostics", "Hdot0", V::number, ""},
                              });
    case Command::sweep:
      return with_run_name(
          c, {
                 {"sweep", "N", V::number_list, "3,4,5,6"},
                 {"sweep", "beta", V::number_list, "0,0.5"},
                 {"sweep", "cases", V::text_list,
                  "1.2:negative,critical:negative,1.2:zero,critical:zero,critical:positive"},
                 {"sweep", "energy_magnitude", V::number, "1"},
                 {"sweep", "M", V::number, "1"},
                 {"sweep", "K", V::number, "1"},
                 {"sweep", "g", V::number, "1"},
                 {"sweep", "domain_measure", V::number, "1"},
                 {"sweep", "H0", V::number, "1"},
                 {"sweep", "Hdot0", V::number, "0"},
             });
    case Command::verify:
      return with_run_name(c, {{"verify", "criteria", V::number_list, ""}});
  }
  throw InvalidInput("unknown command");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> to_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long> to_integer(std::string_view s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

std::optional<bool> to_flag(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  return std::nullopt;
}

std::string where(const std::string& section, const std::string& key) {
  return section + "." + key;
}

void check_value(const KeySpec& spec, const std::string& value) {
  if (value.empty()) return;
  const auto bad = [&](const char* what) {
    throw InvalidInput(where(spec.section, spec.key) + ": expected " + what + ", got '" + value +
                       "'");
  };
  switch (spec.kind) {
    case V::number:
      if (!to_number(value)) bad("a finite number");
      break;
    case V::integer:
      if (!to_integer(value)) bad("an integer");
      break;
    case V::flag:
      if (!to_flag(value)) bad("true or false");
      break;
    case V::number_list:
      for (const auto& item : split_list(value)) {
        if (!to_number(item)) bad("a comma-separated list of numbers");
      }
      break;
    case V::text:
    case V::text_list:
      break;
  }
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::lane_emden: return "lane-emden";
    case Command::family: return "family";
    case Command::evolve: return "evolve";
    case Command::classify: return "classify";
    case Command::sweep: return "sweep";
    case Command::verify: return "verify";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::lane_emden, Command::family, Command::evolve, Command::classify,
                 Command::sweep, Command::verify}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidInput("unknown command '" + std::string(name) + "'");
}

const std::vector<KeySpec>& schema(Command c) {
  static const std::map<Command, std::vector<KeySpec>> all = [] {
    std::map<Command, std::vector<KeySpec>> m;
    for (auto c : {Command::lane_emden, Command::family, Command::evolve, Command::classify,
                   Command::sweep, Command::verify}) {
      m.emplace(c, build_schema(c));
    }
    return m;
  }();
  return all.at(c);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ScenarioConfig::ScenarioConfig(Command c) : command_(c) {
  for (const auto& k : schema(c)) entries_[k.section][k.key] = k.default_value;
}

ScenarioConfig ScenarioConfig::parse(Command c, std::string_view ini_text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(ini_text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InvalidInput("config line " + std::to_string(e.line()) + ": " + e.message());
  }
  ScenarioConfig cfg(c);
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) {
      throw InvalidInput("config key '" + section + "' must appear inside a [section]");
    }
    const auto& keys = schema(c);
    if (std::none_of(keys.begin(), keys.end(),
                     [&](const KeySpec& k) { return k.section == section; })) {
      throw InvalidInput("unknown section [" + section + "] for command " +
                         std::string(to_string(c)));
    }
    for (const auto& [key, value] : body) cfg.set(section, key, value.get_value<std::string>());
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::load(Command c, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(c, ss.str());
}

const KeySpec& ScenarioConfig::spec(const std::string& section, const std::string& key) const {
  const auto& keys = schema(command_);
  auto it = std::find_if(keys.begin(), keys.end(),
                         [&](const KeySpec& k) { return k.section == section && k.key == key; });
  if (it == keys.end()) {
    const bool known_section = std::any_of(keys.begin(), keys.end(),
                                           [&](const KeySpec& k) { return k.section == section; });
    if (!known_section) {
      throw InvalidInput("unknown section [" + section + "] for command " +
                         std::string(to_string(command_)));
    }
    throw InvalidInput("unknown key " + where(section, key));
  }
  return *it;
}

void ScenarioConfig::set(std::string_view dotted_key, std::string value) {
  const auto dot = dotted_key.find('.');
  if (dot == std::string_view::npos) {
    throw InvalidInput("override '" + std::string(dotted_key) + "' must be section.key");
  }
  set(std::string(dotted_key.substr(0, dot)), std::string(dotted_key.substr(dot + 1)),
      std::move(value));
}

void ScenarioConfig::set(const std::string& section, const std::string& key, std::string value) {
  const auto& s = spec(section, key);
  value = trim(value);
  check_value(s, value);
  entries_[section][key] = std::move(value);
}

bool ScenarioConfig::has(const std::string& section, const std::string& key) const {
  spec(section, key);
  return !entries_.at(section).at(key).empty();
}

const std::string& ScenarioConfig::text(const std::string& section, const std::string& key) const {
  spec(section, key);
  return entries_.at(section).at(key);
}

double ScenarioConfig::number(const std::string& section, const std::string& key) const {
  auto v = maybe_number(section, key);
  if (!v) throw InvalidInput(where(section, key) + ": value required");
  return *v;
}

std::optional<double> ScenarioConfig::maybe_number(const std::string& section,
                                                   const std::string& key) const {
  const auto& s = text(section, key);
  if (s.empty()) return std::nullopt;
  return to_number(s);
}

long ScenarioConfig::integer(const std::string& section, const std::string& key) const {
  const auto& s = text(section, key);
  auto v = to_integer(s);
  if (!v) throw InvalidInput(where(section, key) + ": integer value required");
  return *v;
}

bool ScenarioConfig::flag(const std::string& section, const std::string& key) const {
  auto v = to_flag(text(section, key));
  if (!v) throw InvalidInput(where(section, key) + ": true or false required");
  return *v;
}

std::vector<double> ScenarioConfig::numbers(const std::string& section,
                                            const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(text(section, key))) out.push_back(*to_number(item));
  return out;
}

std::vector<std::string> ScenarioConfig::texts(const std::string& section,
                                               const std::string& key) const {
  return split_list(text(section, key));
}

std::string ScenarioConfig::to_ini() const {
  std::ostringstream out;
  std::string current;
  for (const auto& k : schema(command_)) {
    if (k.section != current) {
      if (!current.empty()) out << '\n';
      out << '[' << k.section << "]\n";
      current = k.section;
    }
    out << k.key << " = " << entries_.at(k.section).at(k.key) << '\n';
  }
  return out.str();
}

}  // namespace eplab::tools
