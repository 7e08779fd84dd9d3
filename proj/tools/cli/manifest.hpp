#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sdn::cli {

// Record of one CLI run, written next to its outputs as JSON.
struct RunManifest {
  std::string command;
  std::string input;
  std::map<std::string, double> config;
  std::vector<std::string> outputs;
  std::map<std::string, double> metrics;
  std::string note;

  std::string to_json() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace sdn::cli
