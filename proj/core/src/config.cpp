#include "moduli_atlas/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "moduli_atlas/errors.hpp"

namespace moduli_atlas {

CliConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();

  CliConfig cfg;
  try {
    const auto j = nlohmann::json::parse(buf.str());
    if (!j.is_object()) throw DomainError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "h2") cfg.h2 = value.get<Int>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "out-dir") cfg.out_dir = value.get<std::string>();
      else throw DomainError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

CliConfig load_config_from_env() {
  const char* path = std::getenv(kConfigEnvVar);
  if (path == nullptr || *path == '\0') return {};
  return load_config(path);
}

std::filesystem::path resolve_output(const CliConfig& cfg, const std::filesystem::path& out) {
  if (cfg.out_dir && out.is_relative()) return *cfg.out_dir / out;
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace moduli_atlas
