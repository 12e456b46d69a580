// presets.hpp - named run configurations reproducing the standard figures.

#pragma once

#include <string>
#include <vector>

#include "chancap/cli/config.hpp"

namespace chancap::cli {

// Names accepted by preset_configs.
std::vector<std::string> preset_names();

// Each preset expands to one or more configs with distinct output prefixes.
// Throws ConfigError for unknown names.
std::vector<RunConfig> preset_configs(const std::string& name);

} // namespace chancap::cli
