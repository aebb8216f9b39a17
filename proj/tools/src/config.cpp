#include "config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "tomatomp/error.hpp"
#include "text.hpp"

namespace tomatomp::cli {

InputKind parse_kind(const std::string& s) {
  if (s == "points-csv") return InputKind::PointsCsv;
  if (s == "grid-image-csv") return InputKind::GridImageCsv;
  if (s == "off-mesh") return InputKind::OffMesh;
  if (s == "graph-csv") return InputKind::GraphCsv;
  throw InputError("unknown input kind '" + s + "'");
}

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::PointsCsv: return "points-csv";
    case InputKind::GridImageCsv: return "grid-image-csv";
    case InputKind::OffMesh: return "off-mesh";
    case InputKind::GraphCsv: return "graph-csv";
  }
  return "?";
}

namespace {

double to_double(const std::string& key, const std::string& v) {
  const auto d = parse_number(v);
  if (!d) throw InputError("setting '" + key + "' expects a number, got '" + v + "'");
  return *d;
}

std::size_t to_count(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d < 0 || d != std::floor(d)) {
    throw InputError("setting '" + key + "' expects a non-negative integer, got '" + v + "'");
  }
  return static_cast<std::size_t>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw InputError("setting '" + key + "' expects a boolean, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"input", [](RunConfig& c, auto&, auto& v) { c.input = v; }},
      {"kind", [](RunConfig& c, auto&, auto& v) { c.kind = parse_kind(v); }},
      {"fields-file", [](RunConfig& c, auto&, auto& v) { c.fields_file = v; }},
      {"field", [](RunConfig& c, auto&, auto& v) { c.fields = split(v, ','); }},
      {"coords", [](RunConfig& c, auto&, auto& v) { c.coords = split(v, ','); }},
      {"connectivity",
       [](RunConfig& c, auto& k, auto& v) { c.connectivity = static_cast<int>(to_count(k, v)); }},
      {"tau", [](RunConfig& c, auto& k, auto& v) { c.tau = to_double(k, v); }},
      {"n-lines", [](RunConfig& c, auto& k, auto& v) { c.n_lines = to_count(k, v); }},
      {"q",
       [](RunConfig& c, auto& k, auto& v) {
         c.q = (v == "inf" || v == "infinity") ? INFINITY : to_double(k, v);
       }},
      {"delta", [](RunConfig& c, auto& k, auto& v) { c.delta = to_double(k, v); }},
      {"delta-max", [](RunConfig& c, auto& k, auto& v) { c.delta_max = to_double(k, v); }},
      {"outlier-quantile",
       [](RunConfig& c, auto& k, auto& v) { c.outlier_quantile = to_double(k, v); }},
      {"rescale", [](RunConfig& c, auto& k, auto& v) { c.rescale = to_bool(k, v); }},
      {"tuple-size", [](RunConfig& c, auto& k, auto& v) { c.tuple_size = to_count(k, v); }},
      {"top-variance", [](RunConfig& c, auto& k, auto& v) { c.top_variance = to_count(k, v); }},
      {"quantile", [](RunConfig& c, auto& k, auto& v) { c.quantile = to_double(k, v); }},
      {"coss", [](RunConfig& c, auto&, auto& v) { c.coss = v; }},
      {"pair-score", [](RunConfig& c, auto&, auto& v) { c.pair_score = v; }},
      {"truth-labels", [](RunConfig& c, auto&, auto& v) { c.truth_labels = v; }},
      {"truth-ranking", [](RunConfig& c, auto&, auto& v) { c.truth_ranking = v; }},
      {"top-k", [](RunConfig& c, auto& k, auto& v) { c.top_k = to_count(k, v); }},
      {"a", [](RunConfig& c, auto&, auto& v) { c.diagram_a = v; }},
      {"b", [](RunConfig& c, auto&, auto& v) { c.diagram_b = v; }},
      {"d1", [](RunConfig& c, auto& k, auto& v) { c.d1 = to_double(k, v); }},
      {"d2", [](RunConfig& c, auto& k, auto& v) { c.d2 = to_double(k, v); }},
      {"out", [](RunConfig& c, auto&, auto& v) { c.out = v; }},
      {"seed", [](RunConfig& c, auto& k, auto& v) { c.seed = to_count(k, v); }},
  };
  return table;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw InputError("unknown setting '" + key + "'");
  it->second(cfg, key, value);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(path, lineno, "expected key=value");
    try {
      apply_setting(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(path, lineno, e.what());
    }
  }
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tau >= 0.0)) throw InputError("tau must be non-negative");
  if (cfg.n_lines == 0) throw InputError("n-lines must be at least 1");
  if (!(cfg.q >= 1.0)) throw InputError("q must be >= 1 or inf");
  if (cfg.connectivity != 4 && cfg.connectivity != 8) throw InputError("connectivity must be 4 or 8");
  if (!(cfg.outlier_quantile > 0.0 && cfg.outlier_quantile < 1.0)) {
    throw InputError("outlier-quantile must lie in (0, 1)");
  }
  if (!(cfg.quantile >= 0.0 && cfg.quantile <= 1.0)) throw InputError("quantile must lie in [0, 1]");
  if (cfg.coss != "sum-of-squares" && cfg.coss != "square-of-sum") {
    throw InputError("coss must be sum-of-squares or square-of-sum");
  }
  if (cfg.pair_score != "multiparameter" && cfg.pair_score != "jaccard") {
    throw InputError("pair-score must be multiparameter or jaccard");
  }
  if (cfg.d1 && cfg.d2 && !(*cfg.d1 >= 0.0 && *cfg.d1 < *cfg.d2)) {
    throw InputError("band needs 0 <= d1 < d2");
  }
}

}  // namespace tomatomp::cli
