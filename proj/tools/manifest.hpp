#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace ccflow::tools {

/// Per-run manifest: tool/RNG versions, the full configuration echo, wall
/// time, and a digest per emitted file. Deterministic configs reproduce the
/// same digests on rerun.
class RunManifest {
 public:
  RunManifest(std::string command, nlohmann::json config_echo);

  /// Registers a file that was written under the output directory.
  void add_output(const std::string& path);

  /// Writes <out_dir>/manifest.json and returns its path.
  std::string write(const std::string& out_dir);

 private:
  std::string command_;
  nlohmann::json config_;
  std::chrono::steady_clock::time_point started_;
  std::vector<std::string> outputs_;
};

std::string sha256_file(const std::string& path);

} // namespace ccflow::tools
