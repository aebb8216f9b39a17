#include "ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "text.hpp"
#include "tomatomp/error.hpp"

namespace tomatomp::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return in;
}

double cell_number(const CsvTable& t, std::size_t r, std::size_t c, const std::string& path) {
  const auto v = parse_number(t.rows[r][c]);
  if (!v) {
    throw ParseError(path, t.line_of_row[r], "not a number: '" + t.rows[r][c] + "'");
  }
  return *v;
}

// Field values must be finite; NaN is an input error rather than a syntax one.
double field_value(double v, const std::string& path, std::size_t line, const std::string& name) {
  if (std::isnan(v)) {
    throw InputError(path + ":" + std::to_string(line) + ": NaN value in field '" + name + "'");
  }
  if (!std::isfinite(v)) {
    throw InputError(path + ":" + std::to_string(line) + ": infinite value in field '" + name + "'");
  }
  return v;
}

std::size_t index_value(const std::string& s, const std::string& path, std::size_t line) {
  const auto v = parse_number(s);
  if (!v || *v < 0 || *v != std::floor(*v) || *v > 1e15) {
    throw ParseError(path, line, "expected a vertex index, got '" + s + "'");
  }
  return static_cast<std::size_t>(*v);
}

// Named columns, or every column when none are named.
std::vector<NamedField> fields_from_table(const CsvTable& t, const std::string& path,
                                          const std::vector<std::string>& names) {
  std::vector<std::string> chosen = names;
  if (chosen.empty()) chosen = t.header;
  std::vector<NamedField> out;
  for (const auto& name : chosen) {
    const std::size_t c = t.column(name, path);
    std::vector<double> values(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      values[r] = field_value(cell_number(t, r, c, path), path, t.line_of_row[r], name);
    }
    out.push_back({name, ScalarField(std::move(values))});
  }
  return out;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name, const std::string& source) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InputError(source + ": no column named '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const std::string& path, bool has_header) {
  std::ifstream in = open_input(path);
  CsvTable t;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = !has_header;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (!have_header) {
      for (const auto& h : cells) {
        if (h.empty()) throw ParseError(path, lineno, "empty column name in header");
      }
      std::set<std::string> seen(cells.begin(), cells.end());
      if (seen.size() != cells.size()) throw ParseError(path, lineno, "duplicate column name");
      t.header = std::move(cells);
      width = t.header.size();
      have_header = true;
      continue;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width) {
      throw ParseError(path, lineno,
                       "expected " + std::to_string(width) + " columns, found " +
                           std::to_string(cells.size()));
    }
    t.rows.push_back(std::move(cells));
    t.line_of_row.push_back(lineno);
  }
  if (!have_header) throw ParseError(path, lineno + 1, "missing header");
  return t;
}

Dataset read_points_csv(const std::string& path, const std::vector<std::string>& fields,
                        const std::vector<std::string>& coords) {
  const CsvTable t = read_csv(path);
  if (t.rows.empty()) throw InputError(path + ": no points");
  if (fields.empty()) throw InputError("points-csv needs at least one --field column");
  std::vector<std::string> coord_names = coords;
  if (coord_names.empty()) {
    for (const auto& h : t.header) {
      if (std::find(fields.begin(), fields.end(), h) == fields.end()) coord_names.push_back(h);
    }
  }
  if (coord_names.empty()) throw InputError(path + ": no coordinate columns");
  std::vector<std::size_t> cc;
  for (const auto& name : coord_names) cc.push_back(t.column(name, path));

  std::vector<std::vector<double>> points(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c : cc) {
      const double v = cell_number(t, r, c, path);
      if (!std::isfinite(v)) throw InputError(path + ":" + std::to_string(t.line_of_row[r]) + ": non-finite coordinate");
      points[r].push_back(v);
    }
  }
  Dataset d;
  d.n_vertices = points.size();
  d.cloud = PointCloud(std::move(points));
  d.fields = fields_from_table(t, path, fields);
  return d;
}

Dataset read_grid_csv(const std::string& path, int connectivity) {
  const CsvTable t = read_csv(path, false);
  if (t.rows.empty()) throw InputError(path + ": empty image");
  const std::size_t rows = t.rows.size();
  const std::size_t cols = t.rows.front().size();
  std::vector<double> values;
  values.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      values.push_back(field_value(cell_number(t, r, c, path), path, t.line_of_row[r], "pixel"));
    }
  }
  Dataset d;
  d.n_vertices = rows * cols;
  d.graph = grid_graph(rows, cols, connectivity);
  d.fields.push_back({"pixel", ScalarField(std::move(values))});
  return d;
}

Dataset read_off_mesh(const std::string& path, const std::string& fields_file,
                      const std::vector<std::string>& fields) {
  std::ifstream in = open_input(path);
  std::string line;
  std::size_t lineno = 0;
  // Next non-empty, non-comment line.
  auto next = [&](const char* what) {
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (!trim(line).empty()) return;
    }
    throw ParseError(path, lineno + 1, std::string("unexpected end of file, expected ") + what);
  };
  auto numbers = [&](std::size_t min_count) {
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string s; ss >> s;) tok.push_back(s);
    if (tok.size() < min_count) {
      throw ParseError(path, lineno, "expected at least " + std::to_string(min_count) + " values");
    }
    return tok;
  };

  next("OFF header");
  std::string head = trim(line);
  std::vector<std::string> counts;
  if (head.rfind("OFF", 0) != 0) throw ParseError(path, lineno, "missing OFF header");
  if (head.size() > 3) {
    // Counts may share the header line.
    line = head.substr(3);
    counts = numbers(2);
  } else {
    next("vertex and face counts");
    counts = numbers(2);
  }
  const std::size_t nv = index_value(counts[0], path, lineno);
  const std::size_t nf = index_value(counts[1], path, lineno);

  std::vector<std::vector<double>> coords(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    next("vertex coordinates");
    const auto tok = numbers(3);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = parse_number(tok[k]);
      if (!v || !std::isfinite(*v)) throw ParseError(path, lineno, "bad coordinate '" + tok[k] + "'");
      coords[i].push_back(*v);
    }
  }
  const PointCloud cloud(coords);
  std::map<std::pair<Vertex, Vertex>, double> edges;
  for (std::size_t f = 0; f < nf; ++f) {
    next("face");
    const auto tok = numbers(1);
    const std::size_t k = index_value(tok[0], path, lineno);
    if (k < 2 || tok.size() < k + 1) throw ParseError(path, lineno, "malformed face");
    std::vector<Vertex> face;
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t v = index_value(tok[i], path, lineno);
      if (v >= nv) throw ParseError(path, lineno, "face references vertex " + tok[i]);
      face.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i) {
      Vertex a = face[i], b = face[(i + 1) % k];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      edges.emplace(std::make_pair(a, b), cloud.distance(a, b));
    }
  }

  Dataset d;
  d.n_vertices = nv;
  std::vector<Edge> list;
  for (const auto& [uv, len] : edges) list.push_back({uv.first, uv.second, len});
  d.graph = Graph(nv, std::move(list));
  d.cloud = cloud;
  if (fields_file.empty()) throw InputError("off-mesh input needs --fields-file");
  const CsvTable t = read_csv(fields_file);
  if (t.rows.size() != nv) {
    throw InputError(fields_file + ": " + std::to_string(t.rows.size()) + " rows for " +
                     std::to_string(nv) + " mesh vertices");
  }
  d.fields = fields_from_table(t, fields_file, fields);
  return d;
}

Dataset read_graph_csv(const std::string& edges_path, const std::string& fields_file,
                       const std::vector<std::string>& fields) {
  if (fields_file.empty()) throw InputError("graph-csv input needs --fields-file");
  const CsvTable vt = read_csv(fields_file);
  const std::size_t n = vt.rows.size();
  const CsvTable et = read_csv(edges_path);
  const std::size_t cu = et.column("u", edges_path);
  const std::size_t cv = et.column("v", edges_path);
  const auto has_len = std::find(et.header.begin(), et.header.end(), "length");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < et.rows.size(); ++r) {
    const std::size_t line = et.line_of_row[r];
    Edge e;
    e.u = index_value(et.rows[r][cu], edges_path, line);
    e.v = index_value(et.rows[r][cv], edges_path, line);
    if (e.u >= n || e.v >= n) throw ParseError(edges_path, line, "edge endpoint out of range");
    if (has_len != et.header.end()) {
      e.length = cell_number(et, r, static_cast<std::size_t>(has_len - et.header.begin()), edges_path);
    }
    edges.push_back(e);
  }
  Dataset d;
  d.n_vertices = n;
  d.graph = Graph(n, std::move(edges));
  d.fields = fields_from_table(vt, fields_file, fields);
  return d;
}

Dataset ingest(const std::string& path, const IngestOptions& o) {
  switch (o.kind) {
    case InputKind::PointsCsv: return read_points_csv(path, o.fields, o.coords);
    case InputKind::GridImageCsv: return read_grid_csv(path, o.connectivity);
    case InputKind::OffMesh: return read_off_mesh(path, o.fields_file, o.fields);
    case InputKind::GraphCsv: return read_graph_csv(path, o.fields_file, o.fields);
  }
  throw InputError("unknown input kind");
}

std::vector<std::size_t> read_labels_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  const std::size_t cid = t.column("vertex_id", path);
  const std::size_t cl = t.column("label", path);
  std::vector<std::size_t> labels(t.rows.size());
  std::vector<char> seen(t.rows.size(), 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::size_t line = t.line_of_row[r];
    const std::size_t id = index_value(t.rows[r][cid], path, line);
    if (id >= labels.size() || seen[id]) throw ParseError(path, line, "vertex ids must cover 0..n-1 once");
    seen[id] = 1;
    labels[id] = index_value(t.rows[r][cl], path, line);
  }
  return labels;
}

Ranking read_ranking_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  const std::size_t ci = t.column("id", path);
  const std::size_t cs = t.column("score", path);
  std::vector<RankedItem> items;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double s = cell_number(t, r, cs, path);
    if (std::isnan(s)) throw ParseError(path, t.line_of_row[r], "NaN score");
    items.push_back({t.rows[r][ci], s});
  }
  return make_ranking(std::move(items));
}

PersistenceDiagram read_diagram_json(const std::string& path) {
  std::ifstream in = open_input(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw InputError(path + ": expected an object with a \"points\" array");
  }
  PersistenceDiagram d;
  for (const auto& p : j["points"]) {
    if (!p.contains("birth") || !p.contains("death") || !p["birth"].is_number() ||
        !p["death"].is_number()) {
      throw InputError(path + ": every point needs numeric birth and death");
    }
    DiagramPoint q{p["birth"].get<double>(), p["death"].get<double>(), std::nullopt, false};
    if (p.contains("root") && p["root"].is_number_unsigned()) q.root = p["root"].get<Vertex>();
    if (p.contains("essential") && p["essential"].is_boolean()) q.essential = p["essential"].get<bool>();
    d.push_back(q);
  }
  return d;
}

}  // namespace tomatomp::cli
