#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lgt/lattice.hpp"

namespace lgt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key-path configuration: `[section]` headers followed by `key = value`
// lines (TOML-compatible for scalars), `#` comments. Values are kept as raw
// strings and converted on access; every error names the full key path.
struct ConfigMap {
  std::map<std::string, std::string> entries;

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
};

ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_file(const std::string& path);

enum class Scheme { one_step, two_step_unitary, two_step_naive, coupled };
enum class InitialKind { plane_wave, gaussian, delta };
enum class GaugeProfile { zero, uniform_E, from_gauss };
enum class A0Profile { zero, uniform };

struct ScenarioConfig {
  LatticeSpec lattice;  // carries mass and charge

  InitialKind initial = InitialKind::plane_wave;
  double k = 0.0;                      // plane_wave
  double center = 0.0, width = 1.0, k0 = 0.0;  // gaussian
  int delta_site = 0;                  // delta
  double delta_up_re = 0.0, delta_up_im = 0.0;
  double delta_dn_re = 0.0, delta_dn_im = 0.0;

  bool gauge_enabled = false;
  GaugeProfile profile = GaugeProfile::zero;
  double uniform_e_value = 0.0;
  A0Profile a0_profile = A0Profile::zero;
  double a0_value = 0.0;

  int steps = 100;
  Scheme scheme = Scheme::one_step;

  std::string format = "csv";
  std::vector<std::string> observables;  // subset of the CSV columns
  std::uint64_t seed = 0;

  // Builds and validates; throws ConfigError naming the offending key path.
  static ScenarioConfig from_map(const ConfigMap& map);
};

std::string to_string(Scheme s);

}  // namespace lgt
