#include "lgt/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lgt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\'')))
    return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

bool ConfigMap::has(const std::string& key) const {
  return entries.count(key) != 0;
}

std::string ConfigMap::get_string(const std::string& key) const {
  const auto it = entries.find(key);
  if (it == entries.end()) throw ConfigError("missing key: " + key);
  return strip_quotes(it->second);
}

std::string ConfigMap::get_string(const std::string& key,
                                  const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double ConfigMap::get_double(const std::string& key) const {
  const std::string raw = get_string(key);
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + raw + "'");
  }
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

int ConfigMap::get_int(const std::string& key) const {
  const std::string raw = get_string(key);
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + raw + "'");
  }
}

int ConfigMap::get_int(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string raw = get_string(key);
  if (raw == "true") return true;
  if (raw == "false") return false;
  throw ConfigError(key + ": expected true or false, got '" + raw + "'");
}

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    map.entries[section.empty() ? key : section + "." + key] = value;
  }
  return map;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

ScenarioConfig ScenarioConfig::from_map(const ConfigMap& map) {
  ScenarioConfig c;
  c.lattice.sites = map.get_int("lattice.sites", 256);
  c.lattice.epsilon = map.get_double("lattice.epsilon", 1.0);
  const std::string boundary =
      map.get_string("lattice.boundary", "periodic");
  if (boundary == "periodic")
    c.lattice.boundary = Boundary::periodic;
  else if (boundary == "fixed_zero")
    c.lattice.boundary = Boundary::fixed_zero;
  else
    throw ConfigError("lattice.boundary: expected periodic or fixed_zero");
  c.lattice.mass = map.get_double("matter.mass", 0.0);
  c.lattice.charge = map.get_double("matter.charge", 0.0);

  const std::string init = map.get_string("matter.initial", "plane_wave");
  if (init == "plane_wave") {
    c.initial = InitialKind::plane_wave;
    c.k = map.get_double("matter.k", 0.0);
  } else if (init == "gaussian") {
    c.initial = InitialKind::gaussian;
    c.center = map.get_double("matter.center", c.lattice.sites / 2.0);
    c.width = map.get_double("matter.width", c.lattice.sites / 16.0);
    c.k0 = map.get_double("matter.k0", 0.0);
    if (!(c.width > 0.0)) throw ConfigError("matter.width must be > 0");
  } else if (init == "delta") {
    c.initial = InitialKind::delta;
    c.delta_site = map.get_int("matter.site", 0);
    c.delta_up_re = map.get_double("matter.up_re", 1.0);
    c.delta_up_im = map.get_double("matter.up_im", 0.0);
    c.delta_dn_re = map.get_double("matter.dn_re", 0.0);
    c.delta_dn_im = map.get_double("matter.dn_im", 0.0);
  } else {
    throw ConfigError(
        "matter.initial: expected plane_wave, gaussian, or delta");
  }

  c.gauge_enabled = map.get_bool("gauge.enabled", false);
  const std::string profile = map.get_string("gauge.profile", "zero");
  if (profile == "zero")
    c.profile = GaugeProfile::zero;
  else if (profile == "uniform_E")
    c.profile = GaugeProfile::uniform_E;
  else if (profile == "from_gauss")
    c.profile = GaugeProfile::from_gauss;
  else
    throw ConfigError(
        "gauge.profile: expected zero, uniform_E, or from_gauss");
  c.uniform_e_value = map.get_double("gauge.uniform_e_value", 0.0);
  const std::string a0 = map.get_string("gauge.a0_profile", "zero");
  if (a0 == "zero")
    c.a0_profile = A0Profile::zero;
  else if (a0 == "uniform")
    c.a0_profile = A0Profile::uniform;
  else
    throw ConfigError("gauge.a0_profile: expected zero or uniform");
  c.a0_value = map.get_double("gauge.a0_value", 0.0);

  c.steps = map.get_int("run.steps", 100);
  const std::string scheme = map.get_string("run.scheme", "one_step");
  if (scheme == "one_step")
    c.scheme = Scheme::one_step;
  else if (scheme == "two_step_unitary")
    c.scheme = Scheme::two_step_unitary;
  else if (scheme == "two_step_naive")
    c.scheme = Scheme::two_step_naive;
  else if (scheme == "coupled")
    c.scheme = Scheme::coupled;
  else
    throw ConfigError(
        "run.scheme: expected one_step, two_step_unitary, two_step_naive, "
        "or coupled");

  c.format = map.get_string("output.format", "csv");
  if (c.format != "csv" && c.format != "json")
    throw ConfigError("output.format: expected csv or json");
  const std::string obs = map.get_string(
      "output.observables", "norm,total_charge,gauss_residual,"
                            "two_step_residual");
  std::stringstream ss(obs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](char ch) { return ch == ' '; }),
               item.end());
    if (item.empty()) continue;
    if (item != "norm" && item != "total_charge" &&
        item != "gauss_residual" && item != "two_step_residual")
      throw ConfigError("output.observables: unknown observable '" + item +
                        "'");
    c.observables.push_back(item);
  }
  c.seed = static_cast<std::uint64_t>(map.get_int("run.seed", 0));

  try {
    c.lattice.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  if (c.steps < 1) throw ConfigError("run.steps must be >= 1");
  if (c.scheme == Scheme::coupled) {
    if (c.a0_profile != A0Profile::zero)
      throw ConfigError(
          "gauge.a0_profile: coupled scheme requires zero (temporal gauge)");
    if (c.lattice.boundary != Boundary::periodic)
      throw ConfigError("lattice.boundary: coupled scheme requires periodic");
  }
  if (c.initial == InitialKind::delta &&
      (c.delta_site < 0 || c.delta_site >= c.lattice.sites))
    throw ConfigError("matter.site out of range");
  return c;
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::one_step: return "one_step";
    case Scheme::two_step_unitary: return "two_step_unitary";
    case Scheme::two_step_naive: return "two_step_naive";
    case Scheme::coupled: return "coupled";
  }
  return "?";
}

}  // namespace lgt
