#pragma once

#include <map>
#include <string>

#include "config.hpp"

namespace tomatomp::cli {

// File name -> contents.
using Outputs = std::map<std::string, std::string>;

/// Runs cfg.command fully in memory. Throws InputError on bad input.
Outputs run(const RunConfig& cfg);

/// Creates the directory if needed and writes every file.
void write_outputs(const std::string& dir, const Outputs& outputs);

}  // namespace tomatomp::cli
