#include "writers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "text.hpp"

namespace tomatomp::cli {

using nlohmann::json;

namespace {

json point_json(const DiagramPoint& p) {
  json j;
  j["birth"] = p.birth;
  j["death"] = p.death;
  j["root"] = p.root ? json(*p.root) : json(nullptr);
  j["essential"] = p.essential;
  return j;
}

json diagram_array(const PersistenceDiagram& d) {
  json a = json::array();
  for (const auto& p : d) a.push_back(point_json(p));
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string labels_csv(const std::vector<std::size_t>& labels) {
  std::string out = "vertex_id,label\n";
  for (std::size_t x = 0; x < labels.size(); ++x) {
    out += std::to_string(x) + "," + std::to_string(labels[x]) + "\n";
  }
  return out;
}

std::string ranking_csv(const Ranking& r) {
  std::string out = "id,score\n";
  for (const auto& item : r) out += item.id + "," + format_double(item.score) + "\n";
  return out;
}

std::string diagram_json(const PersistenceDiagram& points,
                         const std::vector<PersistenceDiagram>* lines) {
  json j;
  j["points"] = diagram_array(points);
  if (lines) {
    json a = json::array();
    for (const auto& d : *lines) a.push_back(diagram_array(d));
    j["lines"] = std::move(a);
  }
  return dump(j);
}

std::string summands_json(const Decomposition& dec) {
  json j;
  j["eta"] = dec.family.eta;
  json lines = json::array();
  for (const auto& l : dec.family.lines) {
    const auto b = l.base();
    lines.push_back(std::vector<double>(b.begin(), b.end()));
  }
  j["lines"] = std::move(lines);
  json summands = json::array();
  for (std::size_t id = 0; id < dec.summands.size(); ++id) {
    const Summand& s = dec.summands[id];
    json bars = json::array();
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      const std::size_t l = s.first_line + k;
      json b = point_json(dec.diagrams[l][s.points[k]]);
      b["line"] = l;
      b["point"] = s.points[k];
      bars.push_back(std::move(b));
    }
    summands.push_back({{"id", id}, {"first_line", s.first_line}, {"bars", std::move(bars)}});
  }
  j["summands"] = std::move(summands);
  // pi[line][point] = summand id
  j["pi"] = dec.summand_of_point;
  j["warnings"] = dec.warnings;
  return dump(j);
}

std::string match_json(const PersistenceDiagram& a, const PersistenceDiagram& b,
                       const DiagramDistance& dd, double q) {
  json j;
  j["q"] = std::isinf(q) ? json("inf") : json(q);
  j["distance"] = dd.distance;
  json pairs = json::array();
  std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
  for (const auto& [i, k] : dd.correspondence.matched) {
    pairs.push_back({i, k});
    used_a[i] = used_b[k] = 1;
  }
  j["matched"] = std::move(pairs);
  json da = json::array(), db = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!used_a[i]) da.push_back(i);
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!used_b[k]) db.push_back(k);
  }
  j["diagonal_a"] = std::move(da);
  j["diagonal_b"] = std::move(db);
  return dump(j);
}

std::string metrics_json(const std::map<std::string, double>& metrics) {
  json j = json::object();
  for (const auto& [k, v] : metrics) j[k] = v;
  return dump(j);
}

std::string diagram_svg(const PersistenceDiagram& d, std::optional<double> d1,
                        std::optional<double> d2) {
  constexpr double size = 400.0, pad = 40.0;
  double lo = 0.0, hi = 1.0;
  if (!d.empty()) {
    lo = hi = d.front().death;
    for (const auto& p : d) {
      lo = std::min({lo, p.death, p.birth});
      hi = std::max({hi, p.death, p.birth});
    }
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double margin = (hi - lo) * 0.05;
  lo -= margin;
  hi += margin;
  auto sx = [&](double v) { return pad + (v - lo) / (hi - lo) * (size - 2 * pad); };
  auto sy = [&](double v) { return size - pad - (v - lo) / (hi - lo) * (size - 2 * pad); };
  auto num = [](double v) { return format_double(std::round(v * 100.0) / 100.0); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (d1 && d2) {
    // Quadrilateral between birth = death + d1 and birth = death + d2.
    s << "<polygon fill=\"#f4c7c3\" fill-opacity=\"0.6\" points=\"" << num(sx(lo)) << ","
      << num(sy(lo + *d1)) << " " << num(sx(hi)) << "," << num(sy(hi + *d1)) << " "
      << num(sx(hi)) << "," << num(sy(hi + *d2)) << " " << num(sx(lo)) << ","
      << num(sy(lo + *d2)) << "\"/>\n";
  }
  s << "<line x1=\"" << num(sx(lo)) << "\" y1=\"" << num(sy(lo)) << "\" x2=\"" << num(sx(hi))
    << "\" y2=\"" << num(sy(hi)) << "\" stroke=\"#888\"/>\n";
  s << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size - 2 * pad
    << "\" height=\"" << size - 2 * pad << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << size / 2 << "\" y=\"" << size - 10 << "\" text-anchor=\"middle\" "
    << "font-size=\"12\">death</text>\n";
  s << "<text x=\"12\" y=\"" << size / 2 << "\" text-anchor=\"middle\" font-size=\"12\" "
    << "transform=\"rotate(-90 12 " << size / 2 << ")\">birth</text>\n";
  for (const auto& p : d) {
    s << "<circle cx=\"" << num(sx(p.death)) << "\" cy=\"" << num(sy(p.birth)) << "\" r=\"3\" "
      << "fill=\"" << (p.essential ? "#c0392b" : "#2c3e50") << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tomatomp::cli
