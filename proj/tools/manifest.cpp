#include "manifest.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "csv.hpp"
#include "rnls/rnls.h"

namespace rnls_cli {

namespace fs = std::filesystem;

Manifest::Manifest(std::string command, std::string out_dir)
    : command_(std::move(command)),
      out_dir_(std::move(out_dir)),
      start_(std::chrono::steady_clock::now()) {}

void Manifest::param(const std::string& key, const std::string& value) {
  params_.emplace_back(key, value);
}

void Manifest::param(const std::string& key, double value) { param(key, format_double(value)); }

void Manifest::param(const std::string& key, long value) { param(key, std::to_string(value)); }

void Manifest::result(const std::string& key, const std::string& value) {
  results_.emplace_back(key, value);
}

void Manifest::result(const std::string& key, double value) { result(key, format_double(value)); }

std::string Manifest::artifact(const std::string& name) {
  artifacts_.push_back(name);
  return (fs::path(out_dir_) / name).string();
}

std::string Manifest::write() const {
  std::string listed;
  for (const auto& a : artifacts_) {
    const fs::path p = fs::path(out_dir_) / a;
    if (!fs::exists(p) || fs::file_size(p) == 0) {
      throw std::runtime_error("manifest: artifact " + p.string() + " is missing or empty");
    }
    listed += (listed.empty() ? "" : ",") + a;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  const std::string path = (fs::path(out_dir_) / "manifest.txt").string();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("manifest: cannot open " + path);
  out << "command=" << command_ << '\n'
      << "version=" << rnls_version() << '\n'
      << "out_dir=" << out_dir_ << '\n';
  for (const auto& [k, v] : params_) out << "param." << k << '=' << v << '\n';
  for (const auto& [k, v] : results_) out << "result." << k << '=' << v << '\n';
  out << "artifacts=" << listed << '\n' << "wall_clock_seconds=" << format_double(seconds) << '\n';
  if (!out) throw std::runtime_error("manifest: write to " + path + " failed");
  return path;
}

std::map<std::string, std::string> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("manifest: cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace rnls_cli
