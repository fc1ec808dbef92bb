#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qgan/train.hpp"

namespace qgan {

/// Parse/validation failure with the offending location.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key = value text with [section] headers; '#' starts a comment.
struct ConfigFile {
  std::map<std::string, std::map<std::string, std::string>> sections;

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long get_long(const std::string& section, const std::string& key, long fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_text(const std::string& text, const std::string& origin = "<string>");
};

/// [train] section -> TrainConfig (throws ConfigError on bad fields).
TrainConfig train_config_from(const ConfigFile& cfg);

/// [noise] section -> NoiseModel. preset = off | table-s1; per-qubit keys
/// t1_us_j / t2_star_us_j / f0_j / f1_j override the preset.
NoiseModel noise_model_from(const ConfigFile& cfg);

NoiseModel noise_model_from_spec(const std::string& spec);  // "off" | "table-s1" | path

}  // namespace qgan
