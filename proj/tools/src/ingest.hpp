#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "tomatomp/analytics.hpp"
#include "tomatomp/graph.hpp"
#include "tomatomp/tomato.hpp"

namespace tomatomp::cli {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_of_row;  // 1-based source line

  // Column index by name; throws InputError naming the file when missing.
  std::size_t column(const std::string& name, const std::string& source) const;
};

/// Comma-separated, no quoting; blank lines skipped. Every row must have
/// the header's width.
CsvTable read_csv(const std::string& path, bool has_header = true);

struct Dataset {
  std::size_t n_vertices = 0;
  std::optional<PointCloud> cloud;
  // Absent for point clouds until a scale is chosen.
  std::optional<Graph> graph;
  std::vector<NamedField> fields;
};

struct IngestOptions {
  InputKind kind = InputKind::PointsCsv;
  std::string fields_file;
  std::vector<std::string> fields;
  std::vector<std::string> coords;
  int connectivity = 4;
};

Dataset ingest(const std::string& path, const IngestOptions& options);

Dataset read_points_csv(const std::string& path, const std::vector<std::string>& fields,
                        const std::vector<std::string>& coords);
Dataset read_grid_csv(const std::string& path, int connectivity);
Dataset read_off_mesh(const std::string& path, const std::string& fields_file,
                      const std::vector<std::string>& fields);
Dataset read_graph_csv(const std::string& edges_path, const std::string& fields_file,
                       const std::vector<std::string>& fields);

/// vertex_id,label rows covering 0..n-1 exactly once.
std::vector<std::size_t> read_labels_csv(const std::string& path);

/// id,score rows.
Ranking read_ranking_csv(const std::string& path);

/// Reads the "points" array of a diagram.json.
PersistenceDiagram read_diagram_json(const std::string& path);

}  // namespace tomatomp::cli
