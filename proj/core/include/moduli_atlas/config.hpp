#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "moduli_atlas/checked.hpp"

namespace moduli_atlas {

/// Environment variable naming the optional JSON config file.
inline constexpr const char* kConfigEnvVar = "MODULI_ATLAS_CONFIG";

/// CLI defaults; keys mirror flag names ("h2", "format", "out-dir").
/// Explicit flags always win.
struct CliConfig {
  std::optional<Int> h2;
  std::optional<std::string> format;
  std::optional<std::filesystem::path> out_dir;
};

/// Throws IoError if the file cannot be read, DomainError on bad contents.
[[nodiscard]] CliConfig load_config(const std::filesystem::path& path);

/// Empty config when the variable is unset or empty.
[[nodiscard]] CliConfig load_config_from_env();

/// Relative paths are placed under out_dir when one is configured.
[[nodiscard]] std::filesystem::path resolve_output(const CliConfig& cfg,
                                                   const std::filesystem::path& out);

/// Writes bytes exactly; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace moduli_atlas
