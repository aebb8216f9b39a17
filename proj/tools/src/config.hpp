#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tomatomp::cli {

enum class InputKind { PointsCsv, GridImageCsv, OffMesh, GraphCsv };

struct RunConfig {
  std::string command;

  std::string input;
  InputKind kind = InputKind::PointsCsv;
  // Sidecar per-vertex field table for off-mesh and graph-csv inputs.
  std::string fields_file;
  std::vector<std::string> fields;
  // Coordinate columns of a points csv; empty = every non-field column.
  std::vector<std::string> coords;
  int connectivity = 4;

  double tau = 0.0;
  std::size_t n_lines = 100;
  double q = 2.0;
  double delta = 0.0;
  double delta_max = 0.0;
  double outlier_quantile = 0.05;
  bool rescale = false;

  // rank
  std::size_t tuple_size = 1;
  std::size_t top_variance = 0;
  double quantile = 0.10;
  std::string coss = "sum-of-squares";
  std::string pair_score = "multiparameter";

  // evaluation
  std::string truth_labels;
  std::string truth_ranking;
  std::size_t top_k = 10;

  // match
  std::string diagram_a;
  std::string diagram_b;

  // svg band overlay
  std::optional<double> d1;
  std::optional<double> d2;

  std::string out = ".";
  std::uint64_t seed = 0;
};

InputKind parse_kind(const std::string& s);
std::string kind_name(InputKind k);

/// Applies one `key=value` setting; keys are the long flag names.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Reads a key=value file (blank lines and '#' comments skipped) on top of cfg.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Range checks shared by flags and config files.
void validate(const RunConfig& cfg);

}  // namespace tomatomp::cli
