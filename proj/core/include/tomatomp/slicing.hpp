#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tomatomp/scalar_field.hpp"
#include "tomatomp/tomato.hpp"

namespace tomatomp {

/// Line in R^p with direction (1, ..., 1). Stored by its unique base point
/// on the zero-sum hyperplane; phi(t) = base + t * (1, ..., 1).
class DiagonalLine {
 public:
  DiagonalLine() = default;
  // Any point of the line; it is projected onto the zero-sum hyperplane.
  explicit DiagonalLine(std::vector<double> point_on_line);

  std::size_t dimension() const noexcept { return base_.size(); }
  std::span<const double> base() const noexcept { return base_; }

  std::vector<double> parametrize(double t) const;
  // Inverse of parametrize; throws InputError for points off the line.
  double unparametrize(std::span<const double> point) const;

  // l-infinity distance between canonical bases.
  double distance(const DiagonalLine& other) const;

 private:
  std::vector<double> base_;
};

struct LineFamily {
  std::vector<DiagonalLine> lines;
  // l-infinity spacing between consecutive lines (0 for a single line).
  double eta = 0.0;

  std::size_t size() const noexcept { return lines.size(); }
};

/// min_i (f_i[x] - base_i): the function whose superlevel set at t is the
/// intersection of {f_i >= phi(t)_i}.
ScalarField sliced_field(std::span<const ScalarField> fields, const DiagonalLine& line);

/// Evenly spaced lines covering the fields' joint range. For p = 2 the
/// bases are (c, -c) with c from (min f1 - max f2)/2 to (max f1 - min f2)/2.
/// For p >= 3 the sweep runs along `direction` (a vector in the zero-sum
/// hyperplane), defaulting to the principal axis of the per-point offsets.
/// p = 1 yields `count` copies of the only line.
LineFamily make_line_family(std::span<const ScalarField> fields, std::size_t count,
                            std::optional<std::vector<double>> direction = std::nullopt);

/// Segment of R^p spanned by phi(birth) and phi(death).
struct Bar {
  std::vector<double> birth_end;
  std::vector<double> death_end;
};

Bar bar(const DiagonalLine& line, const DiagramPoint& point);

}  // namespace tomatomp
