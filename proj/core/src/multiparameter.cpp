#include "tomatomp/multiparameter.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "tomatomp/error.hpp"
#include "tomatomp/parallel.hpp"

namespace tomatomp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

VoteOutcome majority_vote(const std::vector<std::vector<std::size_t>>& per_line_labels) {
  if (per_line_labels.empty()) throw InputError("majority vote needs at least one line");
  const std::size_t n = per_line_labels.front().size();
  for (const auto& labels : per_line_labels) {
    if (labels.size() != n) throw InputError("per-line labelings cover different vertex sets");
  }
  VoteOutcome out;
  out.winner.assign(n, kNone);
  out.table.counts.resize(n);
  std::vector<std::size_t> ballot(per_line_labels.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t l = 0; l < per_line_labels.size(); ++l) ballot[l] = per_line_labels[l][x];
    std::sort(ballot.begin(), ballot.end());
    auto& row = out.table.counts[x];
    std::size_t best = 0;
    for (std::size_t i = 0; i < ballot.size();) {
      std::size_t j = i;
      while (j < ballot.size() && ballot[j] == ballot[i]) ++j;
      row.emplace_back(ballot[i], j - i);
      // Ascending ids, so a strict improvement keeps the lowest id on ties.
      if (j - i > best) {
        best = j - i;
        out.winner[x] = ballot[i];
      }
      i = j;
    }
  }
  return out;
}

std::vector<std::size_t> summand_labels(const Clustering& line_clustering,
                                        const Decomposition& dec, std::size_t line) {
  if (line >= dec.diagrams.size()) throw InputError("line index out of range");
  std::unordered_map<Vertex, std::size_t> point_of_root;
  const auto& diagram = dec.diagrams[line];
  for (std::size_t j = 0; j < diagram.size(); ++j) {
    if (diagram[j].root) point_of_root.emplace(*diagram[j].root, j);
  }
  std::vector<std::size_t> summand_of_cluster(line_clustering.size());
  for (std::size_t c = 0; c < line_clustering.size(); ++c) {
    const auto it = point_of_root.find(line_clustering.roots[c]);
    if (it == point_of_root.end()) {
      throw InputError("cluster root has no point on line " + std::to_string(line));
    }
    summand_of_cluster[c] = dec.summand_of_point[line][it->second];
  }
  std::vector<std::size_t> out(line_clustering.labels.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = summand_of_cluster[line_clustering.labels[x]];
  return out;
}

MultiParameterResult cluster_multiparameter(std::span<const ScalarField> fields, const Graph& g,
                                            double tau, const LineFamily& family, double q) {
  if (!(tau >= 0.0)) throw InputError("tau must be non-negative");
  if (fields.empty()) throw InputError("at least one field is required");
  for (const auto& f : fields) {
    if (f.size() != g.n_vertices()) throw InputError("field size does not match graph");
  }
  const std::size_t n_lines = family.size();
  if (n_lines == 0) throw InputError("line family is empty");

  MultiParameterResult res;
  res.sliced.resize(n_lines);
  res.line_clusterings.resize(n_lines);
  std::vector<PersistenceDiagram> diagrams(n_lines);
  parallel_for(n_lines, [&](std::size_t l) {
    res.sliced[l] = sliced_field(fields, family.lines[l]);
    diagrams[l] = compute_persistence(g, res.sliced[l]);
    res.line_clusterings[l] = cluster(g, res.sliced[l], tau);
  });
  res.decomposition = assemble_decomposition(family, std::move(diagrams), q);

  std::vector<std::vector<std::size_t>> per_line(n_lines);
  for (std::size_t l = 0; l < n_lines; ++l) {
    per_line[l] = summand_labels(res.line_clusterings[l], res.decomposition, l);
  }
  VoteOutcome vote = majority_vote(per_line);
  res.votes = std::move(vote.table);

  std::vector<std::size_t> compact(res.decomposition.summands.size(), kNone);
  for (std::size_t s : vote.winner) compact[s] = 0;
  for (std::size_t s = 0; s < compact.size(); ++s) {
    if (compact[s] == kNone) continue;
    compact[s] = res.cluster_summand.size();
    res.cluster_summand.push_back(s);
    const DiagramPoint& p =
        res.decomposition.bar_point(s, res.decomposition.most_prominent_line(s));
    res.clustering.points.push_back(p);
    res.clustering.roots.push_back(p.root.value_or(0));
  }
  res.clustering.labels.resize(g.n_vertices());
  for (std::size_t x = 0; x < g.n_vertices(); ++x) res.clustering.labels[x] = compact[vote.winner[x]];
  return res;
}

MultiParameterResult cluster_multiparameter(std::span<const ScalarField> fields, const Graph& g,
                                            double tau, std::size_t n_lines, double q) {
  return cluster_multiparameter(fields, g, tau, make_line_family(fields, n_lines), q);
}

namespace {

// Keeps the first n labels and renumbers the surviving clusters by first use
// of their old id order.
Clustering restrict_clustering(const Clustering& c, std::size_t n) {
  std::vector<std::size_t> keep(c.size(), kNone);
  for (std::size_t x = 0; x < n; ++x) keep[c.labels[x]] = 0;
  Clustering out;
  for (std::size_t id = 0; id < c.size(); ++id) {
    if (keep[id] == kNone) continue;
    keep[id] = out.roots.size();
    out.roots.push_back(c.roots[id]);
    out.points.push_back(c.points[id]);
  }
  out.labels.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.labels[x] = keep[c.labels[x]];
  return out;
}

}  // namespace

GraphFreeResult pipeline_graph_free(const PointCloud& cloud, const ScalarField& f,
                                    const GraphFreeOptions& options) {
  if (!(options.delta_max > 0.0)) throw InputError("delta_max must be positive");
  if (f.size() != cloud.size()) throw InputError("field size does not match point cloud");
  GraphFreeResult res;
  res.subdivision = barycentric_subdivision(neighborhood_graph(cloud, options.delta_max));
  const std::vector<ScalarField> fields{subdivision_scale_field(res.subdivision, options.delta_max),
                                        restrict_field(f, res.subdivision)};
  res.multiparameter = cluster_multiparameter(fields, res.subdivision.graph, options.tau,
                                              options.n_lines, options.q);
  res.clustering = restrict_clustering(res.multiparameter.clustering, cloud.size());
  return res;
}

OutlierResult pipeline_outlier_robust(const Graph& g, const ScalarField& f,
                                      const OutlierOptions& options) {
  if (!(options.outlier_quantile > 0.0 && options.outlier_quantile < 1.0)) {
    throw InputError("outlier_quantile must lie in (0, 1)");
  }
  if (f.size() != g.n_vertices()) throw InputError("field size does not match graph");
  OutlierResult res;
  res.score = outlier_score(g, f);
  if (g.n_vertices() > 0) {
    const double cut = lower_quantile(res.score.values(), 1.0 - options.outlier_quantile);
    for (Vertex x = 0; x < g.n_vertices(); ++x) {
      if (res.score[x] > cut) res.targets.push_back(x);
    }
  }
  res.augmentation = augment_for_robustness(g, res.targets);
  std::vector<double> neg(res.score.values().begin(), res.score.values().end());
  for (double& v : neg) v = -v;
  const std::vector<ScalarField> fields{ScalarField(std::move(neg)), f};
  res.multiparameter = cluster_multiparameter(fields, res.augmentation.graph, options.tau,
                                              options.n_lines, options.q);
  res.clustering = res.multiparameter.clustering;
  return res;
}

}  // namespace tomatomp
