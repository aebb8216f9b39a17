#include "tomatomp/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tomatomp/error.hpp"

namespace tomatomp {

namespace {

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void check_fields(std::span<const ScalarField> fields) {
  if (fields.empty()) throw InputError("at least one field is required");
  for (const auto& f : fields) {
    if (f.size() != fields.front().size()) throw InputError("fields cover different vertex sets");
  }
}

std::vector<double> project_zero_sum(std::vector<double> v) {
  const double mean = mean_of(v);
  for (double& x : v) x -= mean;
  return v;
}

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

// Principal axis of the offsets by power iteration from a fixed start.
std::vector<double> principal_direction(const std::vector<std::vector<double>>& offsets,
                                        std::size_t p) {
  std::vector<double> mean(p, 0.0);
  for (const auto& o : offsets) {
    for (std::size_t i = 0; i < p; ++i) mean[i] += o[i];
  }
  for (double& x : mean) x /= static_cast<double>(offsets.size());
  std::vector<double> cov(p * p, 0.0);
  for (const auto& o : offsets) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) cov[i * p + j] += (o[i] - mean[i]) * (o[j] - mean[j]);
    }
  }
  std::vector<double> u(p, 0.0);
  u[0] = 1.0;
  u[1] = -1.0;
  u = project_zero_sum(u);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<double> next(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) next[i] += cov[i * p + j] * u[j];
    }
    next = project_zero_sum(std::move(next));
    const double nn = norm2(next);
    if (nn < 1e-300) break;
    for (double& x : next) x /= nn;
    u = std::move(next);
  }
  const double un = norm2(u);
  for (double& x : u) x /= un;
  // Sign convention: first non-negligible coordinate positive.
  for (double x : u) {
    if (std::abs(x) > 1e-12) {
      if (x < 0) {
        for (double& y : u) y = -y;
      }
      break;
    }
  }
  return u;
}

}  // namespace

DiagonalLine::DiagonalLine(std::vector<double> point_on_line) {
  if (point_on_line.empty()) throw InputError("a diagonal line needs dimension >= 1");
  for (double x : point_on_line) {
    if (!std::isfinite(x)) throw InputError("line base must be finite");
  }
  base_ = project_zero_sum(std::move(point_on_line));
}

std::vector<double> DiagonalLine::parametrize(double t) const {
  std::vector<double> out(base_);
  for (double& x : out) x += t;
  return out;
}

double DiagonalLine::unparametrize(std::span<const double> point) const {
  if (point.size() != base_.size()) throw InputError("point dimension does not match line");
  const double t = mean_of(point);
  double scale = 1.0;
  double err = 0.0;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    scale = std::max(scale, std::abs(point[i]));
    err = std::max(err, std::abs(point[i] - t - base_[i]));
  }
  if (err > 1e-9 * scale) throw InputError("point does not lie on the line");
  return t;
}

double DiagonalLine::distance(const DiagonalLine& other) const {
  if (other.dimension() != dimension()) throw InputError("lines live in different dimensions");
  double d = 0.0;
  for (std::size_t i = 0; i < base_.size(); ++i) d = std::max(d, std::abs(base_[i] - other.base_[i]));
  return d;
}

ScalarField sliced_field(std::span<const ScalarField> fields, const DiagonalLine& line) {
  check_fields(fields);
  if (fields.size() != line.dimension()) {
    throw InputError("line dimension " + std::to_string(line.dimension()) + " does not match " +
                     std::to_string(fields.size()) + " fields");
  }
  const auto base = line.base();
  std::vector<double> values(fields.front().size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t x = 0; x < values.size(); ++x) {
      values[x] = std::min(values[x], fields[i][x] - base[i]);
    }
  }
  return ScalarField(std::move(values));
}

LineFamily make_line_family(std::span<const ScalarField> fields, std::size_t count,
                            std::optional<std::vector<double>> direction) {
  check_fields(fields);
  if (count == 0) throw InputError("a line family needs at least one line");
  if (fields.front().size() == 0) throw InputError("fields are empty");
  const std::size_t p = fields.size();
  LineFamily family;

  if (p == 1) {
    family.lines.assign(count, DiagonalLine({0.0}));
    return family;
  }

  auto sweep = [&](double lo, double hi, auto make_base) {
    if (count == 1) {
      family.lines.emplace_back(make_base((lo + hi) / 2.0));
      return 0.0;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
      const double s = k + 1 == count ? hi : lo + step * static_cast<double>(k);
      family.lines.emplace_back(make_base(s));
    }
    return step;
  };

  if (p == 2 && !direction) {
    const double lo = (fields[0].min() - fields[1].max()) / 2.0;
    const double hi = (fields[0].max() - fields[1].min()) / 2.0;
    family.eta = std::abs(sweep(lo, hi, [](double c) { return std::vector<double>{c, -c}; }));
    return family;
  }

  const std::size_t n = fields.front().size();
  std::vector<std::vector<double>> offsets(n, std::vector<double>(p));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < p; ++i) offsets[x][i] = fields[i][x];
    offsets[x] = project_zero_sum(std::move(offsets[x]));
  }

  std::vector<double> u;
  if (direction) {
    if (direction->size() != p) throw InputError("sweep direction has the wrong dimension");
    u = project_zero_sum(*direction);
    const double un = norm2(u);
    if (un < 1e-12) throw InputError("sweep direction must not be parallel to (1, ..., 1)");
    for (double& x : u) x /= un;
  } else {
    u = principal_direction(offsets, p);
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::vector<double> center(p, 0.0);
  for (const auto& o : offsets) {
    double s = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      s += o[i] * u[i];
      center[i] += o[i];
    }
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  for (double& c : center) c /= static_cast<double>(n);
  double cu = 0.0;
  for (std::size_t i = 0; i < p; ++i) cu += center[i] * u[i];
  for (std::size_t i = 0; i < p; ++i) center[i] -= cu * u[i];

  double u_inf = 0.0;
  for (double x : u) u_inf = std::max(u_inf, std::abs(x));
  const double step = sweep(lo, hi, [&](double s) {
    std::vector<double> b(center);
    for (std::size_t i = 0; i < p; ++i) b[i] += s * u[i];
    return b;
  });
  family.eta = std::abs(step) * u_inf;
  return family;
}

Bar bar(const DiagonalLine& line, const DiagramPoint& point) {
  return {line.parametrize(point.birth), line.parametrize(point.death)};
}

}  // namespace tomatomp
