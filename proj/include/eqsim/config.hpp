#pragma once

#include <string>
#include <vector>

#include "eqsim/harness.hpp"

namespace eqsim {

// Flat key=value configuration files ('#' starts a comment, blank lines
// ignored).  Keys mirror the ExperimentConfig fields; see the README for the
// full dictionary.
ExperimentConfig parse_config_file(const std::string& path);

// Apply one key=value override to an existing config (shared by the config
// parser and the CLI's sweep/override machinery).  Unknown keys throw
// std::invalid_argument.
void apply_key_value(ExperimentConfig& cfg, const std::string& key,
                     const std::string& value);

// "a..b" inclusive seed range (also accepts a single number).
std::vector<std::uint64_t> parse_seed_range(const std::string& text);

}  // namespace eqsim
