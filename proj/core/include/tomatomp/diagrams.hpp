#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tomatomp/tomato.hpp"

namespace tomatomp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline double prominence(const DiagramPoint& p) { return p.birth - p.death; }

std::vector<double> prominences(const PersistenceDiagram& d);

// l-infinity distance between diagram points in the (birth, death) plane.
double point_distance(const DiagramPoint& a, const DiagramPoint& b);

// l-infinity distance to the diagonal: prominence / 2.
double diagonal_distance(const DiagramPoint& p);

/// Pairs (index in first diagram, index in second); unlisted points go to
/// the diagonal.
struct PartialCorrespondence {
  std::vector<std::pair<std::size_t, std::size_t>> matched;
};

struct DiagramDistance {
  double distance = 0.0;
  PartialCorrespondence correspondence;
};

/// Exact q-th diagram distance (q >= 1, or kInfinity for bottleneck) with an
/// optimal partial correspondence. Zero-prominence points sit on the
/// diagonal at no cost and are never matched.
DiagramDistance diagram_distance(const PersistenceDiagram& a, const PersistenceDiagram& b,
                                 double q);

inline double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  return diagram_distance(a, b, kInfinity).distance;
}

/// Cost of a given correspondence under the q-th cost (kInfinity: max).
double correspondence_cost(const PersistenceDiagram& a, const PersistenceDiagram& b,
                           const PartialCorrespondence& c, double q);

/// True iff no prominence lies in the open band (low, high).
bool is_separated(const PersistenceDiagram& d, double low, double high);

/// Half the smallest l-infinity distance between two points of prominence
/// >= high inside the same diagram; kInfinity when no diagram has two.
double separation_gap(std::span<const PersistenceDiagram> diagrams, double high);

}  // namespace tomatomp
