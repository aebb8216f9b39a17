#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tomatomp {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double length = 1.0;
};

struct Neighbor {
  Vertex vertex;
  double length;
};

/// Undirected weighted graph over vertex indices [0, n).
///
/// Edges are stored with u < v and kept in insertion order; adjacency lists
/// are sorted by neighbor index. Construction validates that there are no
/// self-loops, no duplicate edges, endpoints in range and finite
/// non-negative lengths. Immutable afterwards.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t n_vertices() const noexcept { return adjacency_.size(); }
  std::size_t n_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex x) const { return adjacency_.at(x); }
  std::size_t degree(Vertex x) const { return adjacency_.at(x).size(); }

  bool has_edge(Vertex a, Vertex b) const;
  // Length of edge (a, b); throws InputError if absent.
  double edge_length(Vertex a, Vertex b) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Points in R^d, all of the same dimension, all coordinates finite.
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(std::vector<std::vector<double>> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const double> operator[](std::size_t i) const { return points_[i]; }

  double distance(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::vector<double>> points_;
  std::size_t dimension_ = 0;
};

/// Edge (u, v) iff 0 < |u - v| <= delta (Euclidean); length = distance.
Graph neighborhood_graph(const PointCloud& cloud, double delta);

/// Pixel grid in row-major order, 4- or 8-connected.
Graph grid_graph(std::size_t rows, std::size_t cols, int connectivity);

struct Subdivision {
  Graph graph;
  std::size_t original_vertices = 0;
  // midpoint_of[e] is the new vertex splitting original edge e.
  std::vector<Vertex> midpoint_of;
};

/// Splits every edge in two halves of equal length. Original vertex
/// indices are preserved; the midpoint of edge e gets index n + e.
Subdivision barycentric_subdivision(const Graph& g);

/// True iff some neighbor of x is adjacent to all other neighbors of x.
/// Vertices of degree <= 1 are robust.
bool is_topologically_robust(const Graph& g, Vertex x);

struct Augmentation {
  Graph graph;
  std::vector<std::pair<Vertex, Vertex>> added;
  // Isolated targets: nothing to connect, reported rather than rejected.
  std::vector<Vertex> unmodifiable;
};

/// Adds edges until every target is topologically robust. A non-robust
/// target gets its lowest-index neighbor connected to all of its other
/// neighbors; the new edge length is the sum of the two incident lengths.
/// Passes repeat until a fixed point since a new edge can grow another
/// target's neighborhood.
Augmentation augment_for_robustness(const Graph& g, std::span<const Vertex> targets);

/// Component id per vertex, ids assigned in order of lowest member.
std::vector<std::size_t> connected_components(const Graph& g);

}  // namespace tomatomp
