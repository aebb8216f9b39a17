#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tomatomp/graph.hpp"
#include "tomatomp/mma.hpp"
#include "tomatomp/scalar_field.hpp"
#include "tomatomp/tomato.hpp"

namespace tomatomp {

/// Adjusted Rand index.
double ari(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Adjusted mutual information (arithmetic-mean normalization, expected MI
/// under the permutation model).
double ami(std::span<const std::size_t> a, std::span<const std::size_t> b);

struct RankedItem {
  std::string id;
  double score = 0.0;
};

/// Sorted by (-score, id).
using Ranking = std::vector<RankedItem>;

Ranking make_ranking(std::vector<RankedItem> items);

/// Sample correlation. Throws InputError on length mismatch, < 2 items or
/// zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Correlation of scores aligned by item id.
double pearson(const Ranking& a, const Ranking& b);

/// |top_k(a) & top_k(b)| / k.
double tophits(const Ranking& a, const Ranking& b, std::size_t k = 10);

enum class CossMode { SumOfSquares, SquareOfSum };

double coss_single(const PersistenceDiagram& d, CossMode mode = CossMode::SumOfSquares);

/// Mean Jaccard index over all cluster pairs (A in c1, B in c2).
double coss_pair(const Clustering& c1, const Clustering& c2);

/// Lower quantile of the per-line CoSS of the induced diagrams.
double coss_multiparameter(const Decomposition& dec, double level = 0.10,
                           CossMode mode = CossMode::SumOfSquares);

struct NamedField {
  std::string name;
  ScalarField field;
};

enum class PairScore { Multiparameter, Jaccard };

struct RankOptions {
  std::size_t tuple_size = 1;
  double tau = 0.0;
  std::size_t n_lines = 100;
  double q = 2.0;
  // Only the fields with the largest variances take part; 0 keeps all.
  std::size_t top_variance = 0;
  double quantile = 0.10;
  CossMode coss = CossMode::SumOfSquares;
  PairScore pair_score = PairScore::Multiparameter;
  bool rescale = false;
};

/// Scores every tuple of the selected fields: single fields by the CoSS of
/// their full diagram, larger tuples by the multi-parameter criterion (or
/// the Jaccard co-localization for pairs). Tuple ids join names with '+'.
Ranking rank_tuples(std::span<const NamedField> fields, const Graph& g, const RankOptions& options);

}  // namespace tomatomp
