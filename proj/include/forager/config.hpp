#pragma once

#include "forager/evolution.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace forager {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complete record of every knob of a run; round-trips losslessly through its
// JSON file form. The master seed lives in evolution.master_seed and appears
// top-level in the file.
struct RunConfig {
  SimParams sim;
  EvoConfig evolution;
  std::string out_dir = "out";
  int snapshot_interval = 10;  // generations between best-genome snapshots
  int workers = 1;
};

RunConfig default_run_config();

/// Throws ConfigError naming the offending field.
void validate(const RunConfig& config);

/// Parses a config file; unknown values or malformed fields raise ConfigError
/// with the field path in the message. Missing fields keep their defaults.
RunConfig load_run_config(const std::filesystem::path& path);

/// Same parse from an in-memory JSON document (e.g. the manifest's config
/// echo); `origin` names the source in error messages.
RunConfig run_config_from_json_string(const std::string& text, const std::string& origin);

std::string run_config_to_json_string(const RunConfig& config);

void save_run_config(const RunConfig& config, const std::filesystem::path& path);

}  // namespace forager
