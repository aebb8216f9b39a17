#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tomatomp/diagrams.hpp"
#include "tomatomp/graph.hpp"
#include "tomatomp/slicing.hpp"

namespace tomatomp {

/// Injective partial map from the points of one line's diagram to the next.
struct MatchingFunction {
  std::vector<std::optional<std::size_t>> image;

  std::size_t matched_count() const;
};

/// Optimal partial correspondence for the q-th distance, read as a map.
MatchingFunction match_consecutive(const PersistenceDiagram& from, const PersistenceDiagram& to,
                                   double q = 2.0);

struct CompatibilityReport {
  bool compatible = true;
  // (point on first line, point on second line) with strictly comparable
  // birth endpoints or strictly comparable death endpoints.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// x <_p y: every coordinate strictly smaller.
bool strictly_less(std::span<const double> x, std::span<const double> y);

CompatibilityReport check_compatibility(const DiagonalLine& from_line,
                                        const PersistenceDiagram& from,
                                        const DiagonalLine& to_line,
                                        const PersistenceDiagram& to,
                                        const MatchingFunction& m);

/// Maximal run of matched bars over consecutive lines.
struct Summand {
  std::size_t first_line = 0;
  // points[k] indexes the diagram of line first_line + k.
  std::vector<std::size_t> points;

  std::size_t last_line() const noexcept { return first_line + points.size() - 1; }
  bool spans(std::size_t line) const noexcept {
    return line >= first_line && line <= last_line();
  }
};

struct Decomposition {
  LineFamily family;
  std::vector<PersistenceDiagram> diagrams;
  std::vector<MatchingFunction> matchings;  // size() == lines - 1
  std::vector<Summand> summands;
  // summand_of_point[line][point]
  std::vector<std::vector<std::size_t>> summand_of_point;
  std::vector<std::string> warnings;

  // pi_line: summand -> point index on that line, when the summand is present.
  std::optional<std::size_t> point_of(std::size_t summand, std::size_t line) const;
  const DiagramPoint& bar_point(std::size_t summand, std::size_t line) const;
  // Line index where the summand reaches its largest prominence.
  std::size_t most_prominent_line(std::size_t summand) const;
};

/// Chains per-line diagrams through consecutive optimal matchings. Summands
/// are ordered by (first line, descending max prominence, point index on
/// the first line).
Decomposition assemble_decomposition(LineFamily family, std::vector<PersistenceDiagram> diagrams,
                                     double q = 2.0);

/// Slices the fields along every line of the family, computes each line's
/// persistence on g, then assembles.
Decomposition build_decomposition(std::span<const ScalarField> fields, const Graph& g,
                                  const LineFamily& family, double q = 2.0);

struct InducedPoint {
  std::size_t summand = 0;
  DiagramPoint point;
};

/// Bars recorded on a family line, tagged by summand.
std::vector<InducedPoint> induced_diagram(const Decomposition& dec, std::size_t line);

/// Intersection of each realized interval with an arbitrary diagonal line.
std::vector<InducedPoint> induced_diagram(const Decomposition& dec, const DiagonalLine& line);

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  bool intersects(const Box& other) const;
};

/// Staircase union of boxes, one per consecutive bar pair (one for a single
/// bar), each spanned by the coordinate-wise min of the death endpoints and
/// max of the birth endpoints.
struct Interval {
  std::vector<Box> boxes;
};

Interval interval_realization(const Decomposition& dec, std::size_t summand);

}  // namespace tomatomp
