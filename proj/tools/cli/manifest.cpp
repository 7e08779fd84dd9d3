#include "cli/manifest.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "sdn/error.hpp"

namespace sdn::cli {

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["input"] = input;
  j["config"] = config;
  j["outputs"] = outputs;
  j["metrics"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : metrics) {
    // Counts are stored as doubles; emit them as JSON integers.
    if (std::trunc(value) == value && std::abs(value) < 9.0e15) {
      j["metrics"][key] = static_cast<long long>(value);
    } else {
      j["metrics"][key] = value;
    }
  }
  if (!note.empty()) j["note"] = note;
  return j.dump(2) + "\n";
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << to_json();
  if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

}  // namespace sdn::cli
