#pragma once

// Flat `key = value` experiment configuration files. Blank lines and lines
// starting with '#' are ignored. Keys:
//
//   experiment        advection | burgers | burgers-shock | sod | buckley-leverett |
//                     buckley-leverett-gravity | taylor-green | double-shear-layer
//   resolutions       comma-separated cell counts per axis
//   t_end, cfl, parabolic_safety, nu
//   p_exponent, epsilon, c_side (c_L = c_R)
//   output_times      comma-separated snapshot times
//   output_dir

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "central/errors.hpp"
#include "central/harness/experiments.hpp"

namespace central::harness {

using Settings = std::map<std::string, std::string, std::less<>>;

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline double parse_real(std::string_view key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (trim(std::string_view(v).substr(pos)).empty()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string(key) + ": expected a number, got '" + v + "'");
}

inline int parse_int(std::string_view key, const std::string& v) {
  const std::string t = trim(v);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ConfigError(std::string(key) + ": expected an integer, got '" + v + "'");
  return out;
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view key, const std::string& v, Parse&& parse) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse(key, item));
  }
  if (out.empty()) throw ConfigError(std::string(key) + ": empty list");
  return out;
}

}  // namespace detail

inline Settings parse_settings(std::istream& in) {
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    s[detail::trim(std::string_view(t).substr(0, eq))] = detail::trim(std::string_view(t).substr(eq + 1));
  }
  return s;
}

inline Settings read_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  return parse_settings(in);
}

/// Overlay settings onto `base`. When `experiment` is present, the defaults
/// of that experiment are used as the base instead.
inline ExperimentConfig apply_settings(ExperimentConfig base, const Settings& s) {
  if (const auto it = s.find("experiment"); it != s.end()) {
    const auto e = parse_experiment(it->second);
    if (!e) throw ConfigError("unknown experiment '" + it->second + "'");
    base = ExperimentConfig::defaults(*e);
  }
  for (const auto& [key, value] : s) {
    if (key == "experiment") continue;
    if (key == "resolutions")
      base.resolutions = detail::parse_list<int>(key, value, detail::parse_int);
    else if (key == "t_end")
      base.t_end = detail::parse_real(key, value);
    else if (key == "cfl")
      base.options.cfl = detail::parse_real(key, value);
    else if (key == "parabolic_safety")
      base.options.parabolic_safety = detail::parse_real(key, value);
    else if (key == "nu")
      base.nu = detail::parse_real(key, value);
    else if (key == "p_exponent")
      base.options.cweno.p_exponent = detail::parse_real(key, value);
    else if (key == "epsilon")
      base.options.cweno.epsilon = detail::parse_real(key, value);
    else if (key == "c_side")
      base.options.cweno.c_left = base.options.cweno.c_right = detail::parse_real(key, value);
    else if (key == "output_times")
      base.output_times = detail::parse_list<double>(key, value, detail::parse_real);
    else if (key == "output_dir")
      base.output_dir = value;
    else
      throw ConfigError("unknown key '" + key + "'");
  }
  return base;
}

}  // namespace central::harness
