#include "tomatomp/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tomatomp/error.hpp"

namespace tomatomp {

ScalarField::ScalarField(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InputError("field value at vertex " + std::to_string(i) + " is not finite");
    }
  }
}

double ScalarField::min() const {
  if (values_.empty()) throw InputError("empty field has no minimum");
  return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max() const {
  if (values_.empty()) throw InputError("empty field has no maximum");
  return *std::max_element(values_.begin(), values_.end());
}

ScalarField dtm_density(const PointCloud& cloud, std::size_t k) {
  const std::size_t n = cloud.size();
  if (k < 1 || k >= n) {
    throw InputError("DTM needs 1 <= k < n (k = " + std::to_string(k) +
                     ", n = " + std::to_string(n) + ")");
  }
  std::vector<double> values(n);
  std::vector<double> sq(n - 1);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t j = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      const double d = cloud.distance(x, y);
      sq[j++] = d * d;
    }
    std::nth_element(sq.begin(), sq.begin() + static_cast<std::ptrdiff_t>(k - 1), sq.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += sq[i];
    values[x] = -std::sqrt(sum / static_cast<double>(k));
  }
  return ScalarField(std::move(values));
}

ScalarField outlier_score(const Graph& g, const ScalarField& f) {
  if (f.size() != g.n_vertices()) throw InputError("field size does not match graph");
  std::vector<double> score(g.n_vertices(), 0.0);
  for (Vertex x = 0; x < g.n_vertices(); ++x) {
    const auto nbrs = g.neighbors(x);
    if (nbrs.empty()) continue;
    double sum = 0.0;
    for (const Neighbor& y : nbrs) sum += std::abs(f[x] - f[y.vertex]);
    score[x] = sum / static_cast<double>(nbrs.size());
  }
  return ScalarField(std::move(score));
}

ScalarField subdivision_scale_field(const Subdivision& sub, double delta_max) {
  if (!(delta_max > 0.0)) throw InputError("delta_max must be positive");
  std::vector<double> values(sub.graph.n_vertices(), delta_max);
  // Each midpoint m has exactly two half-edges; the original length is their sum.
  for (Vertex m : sub.midpoint_of) {
    const auto halves = sub.graph.neighbors(m);
    const double length = halves[0].length + halves[1].length;
    if (length > delta_max) {
      throw InputError("edge length " + std::to_string(length) + " exceeds delta_max " +
                       std::to_string(delta_max));
    }
    values[m] = delta_max - length;
  }
  return ScalarField(std::move(values));
}

ScalarField restrict_field(const ScalarField& f, const Subdivision& sub) {
  if (f.size() != sub.original_vertices) {
    throw InputError("field size does not match the original graph");
  }
  std::vector<double> values(sub.graph.n_vertices());
  for (Vertex x = 0; x < sub.original_vertices; ++x) values[x] = f[x];
  for (Vertex m : sub.midpoint_of) {
    const auto ends = sub.graph.neighbors(m);
    values[m] = std::min(f[ends[0].vertex], f[ends[1].vertex]);
  }
  return ScalarField(std::move(values));
}

ScalarField rescale_unit(const ScalarField& f) {
  if (f.size() == 0) return f;
  const double lo = f.min();
  const double span = f.max() - lo;
  std::vector<double> values(f.size(), 0.0);
  if (span > 0.0) {
    for (std::size_t i = 0; i < f.size(); ++i) values[i] = (f[i] - lo) / span;
  }
  return ScalarField(std::move(values));
}

double lower_quantile(std::span<const double> values, double level) {
  if (values.empty()) throw InputError("quantile of an empty sample");
  if (!(level >= 0.0 && level <= 1.0)) throw InputError("quantile level must lie in [0, 1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto idx = static_cast<std::size_t>(
      std::floor(level * static_cast<double>(sorted.size() - 1) + 1e-12));
  return sorted[std::min(idx, sorted.size() - 1)];
}

double variance(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return acc / static_cast<double>(values.size());
}

}  // namespace tomatomp
