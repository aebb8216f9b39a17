#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tomatomp/graph.hpp"

namespace tomatomp {

/// One finite real value per vertex.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  double min() const;
  double max() const;

 private:
  std::vector<double> values_;
};

/// Negated distance-to-measure with k nearest neighbors (x excluded):
/// -sqrt(mean of squared distances). Dense regions get high values.
ScalarField dtm_density(const PointCloud& cloud, std::size_t k);

/// Mean absolute difference to graph neighbors; 0 for isolated vertices.
ScalarField outlier_score(const Graph& g, const ScalarField& f);

/// Field on a barycentric subdivision: delta_max at original vertices,
/// delta_max - length(e) at the midpoint of e, so short edges enter a
/// decreasing scan first.
ScalarField subdivision_scale_field(const Subdivision& sub, double delta_max);

/// Extends f to a subdivision; a midpoint takes the min of its endpoints.
ScalarField restrict_field(const ScalarField& f, const Subdivision& sub);

/// Affine map onto [0, 1]; constant fields map to all zeros.
ScalarField rescale_unit(const ScalarField& f);

/// Empirical quantile with lower interpolation: sorted[floor(level * (n - 1))].
double lower_quantile(std::span<const double> values, double level);

double variance(std::span<const double> values);

}  // namespace tomatomp
