#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tomatomp::cli {

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

// Whole-string strtod; std::nullopt on trailing garbage or empty input.
// "nan" parses (callers decide whether NaN is acceptable).
std::optional<double> parse_number(const std::string& s);

// Shortest text that reads back to the same double ("%.17g" fallback).
std::string format_double(double x);

}  // namespace tomatomp::cli
