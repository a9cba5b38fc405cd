#pragma once

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rnls_cli {

/// Flat key=value record of one command invocation, written as manifest.txt
/// in the output directory.
class Manifest {
 public:
  Manifest(std::string command, std::string out_dir);

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, double value);
  void param(const std::string& key, long value);
  void result(const std::string& key, const std::string& value);
  void result(const std::string& key, double value);
  /// Registers a file (relative to the output directory) and returns its full path.
  std::string artifact(const std::string& name);

  /// Throws std::runtime_error if a listed artifact is missing or empty.
  std::string write() const;

 private:
  std::string command_;
  std::string out_dir_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::pair<std::string, std::string>> results_;
  std::vector<std::string> artifacts_;
  std::chrono::steady_clock::time_point start_;
};

/// Parses a key=value file; later keys overwrite earlier ones.
std::map<std::string, std::string> read_manifest(const std::string& path);

}  // namespace rnls_cli
