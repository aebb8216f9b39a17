#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tomatomp/graph.hpp"
#include "tomatomp/mma.hpp"
#include "tomatomp/scalar_field.hpp"
#include "tomatomp/tomato.hpp"

namespace tomatomp {

/// Per vertex, (summand id, number of lines voting for it), sorted by id.
struct VoteTable {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> counts;
};

struct VoteOutcome {
  std::vector<std::size_t> winner;
  VoteTable table;
};

/// Plurality over lines; ties go to the lowest summand id.
/// per_line_labels[line][vertex] is a summand id.
VoteOutcome majority_vote(const std::vector<std::vector<std::size_t>>& per_line_labels);

/// Relabels a line clustering by summand: each cluster maps to the summand
/// holding its root's diagram point on that line.
std::vector<std::size_t> summand_labels(const Clustering& line_clustering,
                                        const Decomposition& dec, std::size_t line);

struct MultiParameterResult {
  Clustering clustering;
  // Summand behind each output cluster.
  std::vector<std::size_t> cluster_summand;
  Decomposition decomposition;
  std::vector<ScalarField> sliced;
  std::vector<Clustering> line_clusterings;
  VoteTable votes;
};

/// Majority-vote multi-parameter clustering over a family of diagonal lines.
/// Output clusters are the summands that win at least one vertex, in
/// summand order; each carries its most prominent bar as diagram point.
MultiParameterResult cluster_multiparameter(std::span<const ScalarField> fields, const Graph& g,
                                            double tau, const LineFamily& family,
                                            double q = 2.0);

/// Convenience overload building the default family.
MultiParameterResult cluster_multiparameter(std::span<const ScalarField> fields, const Graph& g,
                                            double tau, std::size_t n_lines, double q = 2.0);

struct GraphFreeOptions {
  double delta_max = 1.0;
  double tau = 0.0;
  std::size_t n_lines = 100;
  double q = 2.0;
};

struct GraphFreeResult {
  // Labels of the original points only.
  Clustering clustering;
  Subdivision subdivision;
  MultiParameterResult multiparameter;
};

/// Clusters without picking a neighborhood scale: the subdivided
/// delta_max-graph carries an edge-length field next to f, and the lines
/// sweep the scale jointly with f.
GraphFreeResult pipeline_graph_free(const PointCloud& cloud, const ScalarField& f,
                                    const GraphFreeOptions& options);

struct OutlierOptions {
  double tau = 0.0;
  std::size_t n_lines = 100;
  double q = 2.0;
  // Fraction of vertices (by outlier score) made topologically robust.
  double outlier_quantile = 0.05;
};

struct OutlierResult {
  Clustering clustering;
  ScalarField score;
  std::vector<Vertex> targets;
  Augmentation augmentation;
  MultiParameterResult multiparameter;
};

/// Outlier-robust clustering: vertices scoring above the (1 - quantile)
/// quantile of the outlier score are made robust, then the negated score
/// and f are clustered jointly so outliers enter late.
OutlierResult pipeline_outlier_robust(const Graph& g, const ScalarField& f,
                                      const OutlierOptions& options);

}  // namespace tomatomp
