#include "commands.hpp"

#include <filesystem>
#include <fstream>

#include "ingest.hpp"
#include "tomatomp/error.hpp"
#include "tomatomp/tomatomp.hpp"
#include "writers.hpp"

namespace tomatomp::cli {

namespace {

Dataset load(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  IngestOptions o;
  o.kind = cfg.kind;
  o.fields_file = cfg.fields_file;
  o.fields = cfg.fields;
  o.coords = cfg.coords;
  o.connectivity = cfg.connectivity;
  Dataset d = ingest(cfg.input, o);
  if (d.fields.empty()) throw InputError("no fields selected");
  if (cfg.rescale) {
    for (auto& nf : d.fields) nf.field = rescale_unit(nf.field);
  }
  return d;
}

const Graph& graph_of(Dataset& d, const RunConfig& cfg) {
  if (!d.graph) {
    if (!(cfg.delta > 0.0)) throw InputError("points-csv input needs --delta > 0 to build a graph");
    d.graph = neighborhood_graph(*d.cloud, cfg.delta);
  }
  return *d.graph;
}

const ScalarField& single_field(const Dataset& d, const std::string& command) {
  if (d.fields.size() != 1) {
    throw InputError(command + " takes exactly one field, got " + std::to_string(d.fields.size()));
  }
  return d.fields.front().field;
}

std::vector<ScalarField> all_fields(const Dataset& d) {
  std::vector<ScalarField> out;
  for (const auto& nf : d.fields) out.push_back(nf.field);
  return out;
}

void add_label_metrics(const RunConfig& cfg, const std::vector<std::size_t>& labels, Outputs& out) {
  if (cfg.truth_labels.empty()) return;
  const auto truth = read_labels_csv(cfg.truth_labels);
  if (truth.size() != labels.size()) {
    throw InputError("truth labels cover " + std::to_string(truth.size()) + " vertices, expected " +
                     std::to_string(labels.size()));
  }
  out["metrics.json"] = metrics_json({{"ari", ari(truth, labels)}, {"ami", ami(truth, labels)}});
}

void add_multiparameter(const RunConfig& cfg, const Clustering& c, const MultiParameterResult& mp,
                        Outputs& out) {
  out["labels.csv"] = labels_csv(c.labels);
  out["diagram.json"] = diagram_json(c.points, &mp.decomposition.diagrams);
  out["summands.json"] = summands_json(mp.decomposition);
  out["diagram.svg"] = diagram_svg(c.points, cfg.d1, cfg.d2);
  add_label_metrics(cfg, c.labels, out);
}

Outputs cmd_cluster(const RunConfig& cfg) {
  Dataset d = load(cfg);
  const Graph& g = graph_of(d, cfg);
  const ScalarField& f = single_field(d, "cluster");
  const Clustering c = cluster(g, f, cfg.tau);
  const PersistenceDiagram full = compute_persistence(g, f);
  Outputs out;
  out["labels.csv"] = labels_csv(c.labels);
  out["diagram.json"] = diagram_json(full);
  out["diagram.svg"] = diagram_svg(full, cfg.d1, cfg.d2);
  add_label_metrics(cfg, c.labels, out);
  return out;
}

Outputs cmd_cluster_mp(const RunConfig& cfg) {
  Dataset d = load(cfg);
  const Graph& g = graph_of(d, cfg);
  const auto fields = all_fields(d);
  const MultiParameterResult mp = cluster_multiparameter(fields, g, cfg.tau, cfg.n_lines, cfg.q);
  Outputs out;
  add_multiparameter(cfg, mp.clustering, mp, out);
  return out;
}

Outputs cmd_graph_free(const RunConfig& cfg) {
  if (cfg.kind != InputKind::PointsCsv) throw InputError("graph-free needs points-csv input");
  Dataset d = load(cfg);
  GraphFreeOptions o;
  o.delta_max = cfg.delta_max;
  o.tau = cfg.tau;
  o.n_lines = cfg.n_lines;
  o.q = cfg.q;
  const GraphFreeResult r = pipeline_graph_free(*d.cloud, single_field(d, "graph-free"), o);
  Outputs out;
  add_multiparameter(cfg, r.clustering, r.multiparameter, out);
  return out;
}

Outputs cmd_outlier_robust(const RunConfig& cfg) {
  Dataset d = load(cfg);
  const Graph& g = graph_of(d, cfg);
  OutlierOptions o;
  o.tau = cfg.tau;
  o.n_lines = cfg.n_lines;
  o.q = cfg.q;
  o.outlier_quantile = cfg.outlier_quantile;
  const OutlierResult r = pipeline_outlier_robust(g, single_field(d, "outlier-robust"), o);
  Outputs out;
  add_multiparameter(cfg, r.clustering, r.multiparameter, out);
  return out;
}

Outputs cmd_rank(const RunConfig& cfg) {
  Dataset d = load(cfg);
  const Graph& g = graph_of(d, cfg);
  RankOptions o;
  o.tuple_size = cfg.tuple_size;
  o.tau = cfg.tau;
  o.n_lines = cfg.n_lines;
  o.q = cfg.q;
  o.top_variance = cfg.top_variance;
  o.quantile = cfg.quantile;
  o.coss = cfg.coss == "square-of-sum" ? CossMode::SquareOfSum : CossMode::SumOfSquares;
  o.pair_score = cfg.pair_score == "jaccard" ? PairScore::Jaccard : PairScore::Multiparameter;
  const Ranking r = rank_tuples(d.fields, g, o);
  Outputs out;
  out["ranking.csv"] = ranking_csv(r);
  if (!cfg.truth_ranking.empty()) {
    const Ranking truth = read_ranking_csv(cfg.truth_ranking);
    out["metrics.json"] = metrics_json(
        {{"pearson", pearson(truth, r)}, {"tophits", tophits(truth, r, cfg.top_k)}});
  }
  return out;
}

Outputs cmd_diagram(const RunConfig& cfg) {
  Dataset d = load(cfg);
  const Graph& g = graph_of(d, cfg);
  const PersistenceDiagram dgm = compute_persistence(g, single_field(d, "diagram"));
  Outputs out;
  out["diagram.json"] = diagram_json(dgm);
  out["diagram.svg"] = diagram_svg(dgm, cfg.d1, cfg.d2);
  return out;
}

Outputs cmd_match(const RunConfig& cfg) {
  if (cfg.diagram_a.empty() || cfg.diagram_b.empty()) throw InputError("match needs --a and --b");
  const PersistenceDiagram a = read_diagram_json(cfg.diagram_a);
  const PersistenceDiagram b = read_diagram_json(cfg.diagram_b);
  const DiagramDistance dd = diagram_distance(a, b, cfg.q);
  return {{"match.json", match_json(a, b, dd, cfg.q)}};
}

}  // namespace

Outputs run(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.command == "cluster") return cmd_cluster(cfg);
  if (cfg.command == "cluster-mp") return cmd_cluster_mp(cfg);
  if (cfg.command == "graph-free") return cmd_graph_free(cfg);
  if (cfg.command == "outlier-robust") return cmd_outlier_robust(cfg);
  if (cfg.command == "rank") return cmd_rank(cfg);
  if (cfg.command == "diagram") return cmd_diagram(cfg);
  if (cfg.command == "match") return cmd_match(cfg);
  throw InputError("unknown command '" + cfg.command + "'");
}

void write_outputs(const std::string& dir, const Outputs& outputs) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, content] : outputs) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
  }
}

}  // namespace tomatomp::cli
