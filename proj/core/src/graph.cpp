#include "tomatomp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tomatomp/error.hpp"
#include "tomatomp/union_find.hpp"

namespace tomatomp {

namespace {

bool neighbor_less(const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; }

const Neighbor* find_neighbor(const std::vector<Neighbor>& adj, Vertex b) {
  auto it = std::lower_bound(adj.begin(), adj.end(), Neighbor{b, 0.0}, neighbor_less);
  if (it == adj.end() || it->vertex != b) return nullptr;
  return &*it;
}

}  // namespace

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(n_vertices) {
  for (auto& e : edges_) {
    if (e.u >= n_vertices || e.v >= n_vertices) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(n_vertices) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.length) || e.length < 0.0) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an invalid length");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    adjacency_[e.u].push_back({e.v, e.length});
    adjacency_[e.v].push_back({e.u, e.length});
  }
  for (Vertex x = 0; x < n_vertices; ++x) {
    auto& adj = adjacency_[x];
    std::sort(adj.begin(), adj.end(), neighbor_less);
    auto dup = std::adjacent_find(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.vertex == b.vertex;
    });
    if (dup != adj.end()) {
      throw InputError("duplicate edge (" + std::to_string(x) + ", " +
                       std::to_string(dup->vertex) + ")");
    }
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_vertices() || b >= n_vertices()) return false;
  return find_neighbor(adjacency_[a], b) != nullptr;
}

double Graph::edge_length(Vertex a, Vertex b) const {
  const Neighbor* nb = a < n_vertices() ? find_neighbor(adjacency_[a], b) : nullptr;
  if (nb == nullptr) {
    throw InputError("no edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return nb->length;
}

PointCloud::PointCloud(std::vector<std::vector<double>> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dimension_ = points_.front().size();
  if (dimension_ == 0) throw InputError("points must have dimension >= 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dimension_) {
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(points_[i].size()) + ", expected " +
                       std::to_string(dimension_));
    }
    for (double c : points_[i]) {
      if (!std::isfinite(c)) throw InputError("point " + std::to_string(i) + " is not finite");
    }
  }
}

double PointCloud::distance(std::size_t a, std::size_t b) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < dimension_; ++k) {
    const double d = points_[a][k] - points_[b][k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Graph neighborhood_graph(const PointCloud& cloud, double delta) {
  if (!(delta > 0.0)) throw InputError("delta must be positive");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < cloud.size(); ++u) {
    for (std::size_t v = u + 1; v < cloud.size(); ++v) {
      const double d = cloud.distance(u, v);
      if (d > 0.0 && d <= delta) edges.push_back({u, v, d});
    }
  }
  return Graph(cloud.size(), std::move(edges));
}

Graph grid_graph(std::size_t rows, std::size_t cols, int connectivity) {
  if (rows == 0 || cols == 0) throw InputError("grid must have at least one row and column");
  if (connectivity != 4 && connectivity != 8) throw InputError("connectivity must be 4 or 8");
  const double diagonal = std::sqrt(2.0);
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
      if (connectivity == 8 && r + 1 < rows) {
        if (c + 1 < cols) edges.push_back({id(r, c), id(r + 1, c + 1), diagonal});
        if (c > 0) edges.push_back({id(r, c), id(r + 1, c - 1), diagonal});
      }
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Subdivision barycentric_subdivision(const Graph& g) {
  const std::size_t n = g.n_vertices();
  Subdivision sub;
  sub.original_vertices = n;
  sub.midpoint_of.reserve(g.n_edges());
  std::vector<Edge> edges;
  edges.reserve(2 * g.n_edges());
  std::size_t next = n;
  for (const Edge& e : g.edges()) {
    const Vertex m = next++;
    sub.midpoint_of.push_back(m);
    edges.push_back({e.u, m, e.length / 2.0});
    edges.push_back({m, e.v, e.length / 2.0});
  }
  sub.graph = Graph(next, std::move(edges));
  return sub;
}

bool is_topologically_robust(const Graph& g, Vertex x) {
  if (x >= g.n_vertices()) throw InputError("vertex out of range");
  const auto nbrs = g.neighbors(x);
  if (nbrs.size() <= 1) return true;
  for (const Neighbor& hub : nbrs) {
    const bool covers = std::all_of(nbrs.begin(), nbrs.end(), [&](const Neighbor& w) {
      return w.vertex == hub.vertex || g.has_edge(hub.vertex, w.vertex);
    });
    if (covers) return true;
  }
  return false;
}

Augmentation augment_for_robustness(const Graph& g, std::span<const Vertex> targets) {
  std::vector<Vertex> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex x : sorted) {
    if (x >= g.n_vertices()) throw InputError("target vertex out of range");
  }

  Augmentation out;
  out.graph = g;
  for (Vertex x : sorted) {
    if (g.degree(x) == 0) out.unmodifiable.push_back(x);
  }

  // Every pass either adds an edge or stops; the number of edges is bounded.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex x : sorted) {
      const Graph& cur = out.graph;
      if (is_topologically_robust(cur, x)) continue;
      const auto nbrs = cur.neighbors(x);
      const Neighbor hub = nbrs.front();
      std::vector<Edge> edges(cur.edges().begin(), cur.edges().end());
      for (const Neighbor& w : nbrs) {
        if (w.vertex == hub.vertex || cur.has_edge(hub.vertex, w.vertex)) continue;
        edges.push_back({hub.vertex, w.vertex, hub.length + w.length});
        out.added.emplace_back(std::min(hub.vertex, w.vertex), std::max(hub.vertex, w.vertex));
      }
      out.graph = Graph(cur.n_vertices(), std::move(edges));
      changed = true;
    }
  }
  return out;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  UnionFind uf(g.n_vertices());
  for (const Edge& e : g.edges()) {
    const std::size_t a = uf.find(e.u);
    const std::size_t b = uf.find(e.v);
    if (a == b) continue;
    // Keep the lowest index as representative.
    if (a < b) {
      uf.link(b, a);
    } else {
      uf.link(a, b);
    }
  }
  std::vector<std::size_t> id(g.n_vertices());
  std::vector<std::size_t> id_of_root(g.n_vertices(), g.n_vertices());
  std::size_t next = 0;
  for (Vertex x = 0; x < g.n_vertices(); ++x) {
    const std::size_t r = uf.find(x);
    if (id_of_root[r] == g.n_vertices()) id_of_root[r] = next++;
    id[x] = id_of_root[r];
  }
  return id;
}

}  // namespace tomatomp
