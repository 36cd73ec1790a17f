#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "semion/config.hpp"

namespace semion {

std::string version();

struct RunOptions {
  std::size_t workers = 0;  // 0: default_worker_count()
  std::filesystem::path output_dir = ".";
  bool write_sidecar = true;
};

struct RunOutput {
  std::vector<std::filesystem::path> files;
  double wall_seconds = 0.0;
};

/// SEMION_OUTPUT_DIR, or the current directory.
std::filesystem::path default_output_dir();

/// Runs the experiment and writes its CSV (or JSON) output plus a
/// `<output>.meta.json` sidecar with the config, seed, version and wall time.
/// Output bodies depend only on the config.
RunOutput run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Reads a JSON config, or recovers the config embedded in a result CSV.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace semion
