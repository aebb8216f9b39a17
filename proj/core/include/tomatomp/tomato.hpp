#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tomatomp/graph.hpp"
#include "tomatomp/scalar_field.hpp"

namespace tomatomp {

/// A mode of a superlevel filtration: born at its local maximum, dead at the
/// merge value (or at the minimum of its component for essential modes).
struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;
  std::optional<Vertex> root;
  bool essential = false;

  bool operator==(const DiagramPoint&) const = default;
};

using PersistenceDiagram = std::vector<DiagramPoint>;

struct Clustering {
  // labels[x] is a cluster id in [0, size()).
  std::vector<std::size_t> labels;
  std::vector<Vertex> roots;
  std::vector<DiagramPoint> points;

  std::size_t size() const noexcept { return roots.size(); }
  std::vector<Vertex> members(std::size_t cluster_id) const;
};

/// Full 0-dimensional superlevel persistence (every merge recorded).
/// Vertices are scanned by (-f, index); points come out in birth order.
PersistenceDiagram compute_persistence(const Graph& g, const ScalarField& f);

/// ToMATo with prominence threshold tau: a merge happens when the younger
/// root is less than tau above the current vertex. Cluster ids follow the
/// scan order of their roots.
Clustering cluster(const Graph& g, const ScalarField& f, double tau);

/// Members of a cluster with f >= death + margin.
std::vector<Vertex> core(const Clustering& c, const ScalarField& f,
                         std::size_t cluster_id, double margin);

struct Relatedness {
  bool related = false;
  // bijection[i] is the cluster of the second clustering paired with cluster i.
  std::vector<std::size_t> bijection;
  std::string diagnostic;
};

/// Checks whether the clusterings are mutually 3*epsilon-related: a
/// bijection b exists with core_1(i, 3 eps) inside cluster b(i) of c2 and
/// core_2(b(i), 3 eps) inside cluster i of c1.
Relatedness check_related(const Clustering& c1, const ScalarField& f1,
                          const Clustering& c2, const ScalarField& f2,
                          double epsilon);

/// Same-function form: f1 measures the cores of both clusterings.
Relatedness check_related(const Clustering& c1, const ScalarField& f1,
                          const Clustering& c2, double epsilon);

}  // namespace tomatomp
