#include "tomatomp/tomato.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "tomatomp/assignment.hpp"
#include "tomatomp/error.hpp"
#include "tomatomp/union_find.hpp"

namespace tomatomp {

namespace {

struct ScanOrder {
  std::vector<Vertex> order;      // vertices by (-f, index)
  std::vector<std::size_t> rank;  // inverse of order
};

ScanOrder scan_order(const ScalarField& f) {
  ScanOrder s;
  s.order.resize(f.size());
  std::iota(s.order.begin(), s.order.end(), Vertex{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&f](Vertex a, Vertex b) { return f[a] > f[b]; });
  s.rank.resize(f.size());
  for (std::size_t i = 0; i < s.order.size(); ++i) s.rank[s.order[i]] = i;
  return s;
}

void check_sizes(const Graph& g, const ScalarField& f) {
  if (f.size() != g.n_vertices()) {
    throw InputError("field has " + std::to_string(f.size()) + " values but graph has " +
                     std::to_string(g.n_vertices()) + " vertices");
  }
}

// Shared sweep. The union-find representative of every set is the vertex of
// its mode (the set's earliest vertex in scan order). `merge_allowed` gates
// the union of two modes at the current vertex; `on_merge` sees
// (dying root, surviving root, current vertex).
template <typename Gate, typename OnBirth, typename OnMerge>
void sweep(const Graph& g, const ScanOrder& s, UnionFind& uf,
           Gate merge_allowed, OnBirth on_birth, OnMerge on_merge) {
  for (const Vertex x : s.order) {
    const std::size_t rx = s.rank[x];
    Vertex steepest = x;
    for (const Neighbor& nb : g.neighbors(x)) {
      if (s.rank[nb.vertex] < rx && (steepest == x || s.rank[nb.vertex] < s.rank[steepest])) {
        steepest = nb.vertex;
      }
    }
    if (steepest == x) {
      on_birth(x);
      continue;
    }
    std::size_t current = uf.find(steepest);
    uf.link(x, current);
    for (const Neighbor& nb : g.neighbors(x)) {
      if (s.rank[nb.vertex] >= rx) continue;
      const std::size_t other = uf.find(nb.vertex);
      if (other == current || !merge_allowed(other, current, x)) continue;
      const bool other_elder = s.rank[other] < s.rank[current];
      const std::size_t elder = other_elder ? other : current;
      const std::size_t younger = other_elder ? current : other;
      uf.link(younger, elder);
      on_merge(younger, elder, x);
      current = elder;
    }
  }
}

}  // namespace

std::vector<Vertex> Clustering::members(std::size_t cluster_id) const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < labels.size(); ++x) {
    if (labels[x] == cluster_id) out.push_back(x);
  }
  return out;
}

PersistenceDiagram compute_persistence(const Graph& g, const ScalarField& f) {
  check_sizes(g, f);
  const ScanOrder s = scan_order(f);
  UnionFind uf(f.size());
  PersistenceDiagram diagram;
  std::vector<std::size_t> point_of(f.size(), std::numeric_limits<std::size_t>::max());

  sweep(
      g, s, uf, [](std::size_t, std::size_t, Vertex) { return true; },
      [&](Vertex x) {
        point_of[x] = diagram.size();
        diagram.push_back({f[x], f[x], x, false});
      },
      [&](std::size_t younger, std::size_t, Vertex x) { diagram[point_of[younger]].death = f[x]; });

  // Surviving modes die at the minimum of their component.
  std::vector<double> component_min(f.size(), std::numeric_limits<double>::infinity());
  for (Vertex x = 0; x < f.size(); ++x) {
    const std::size_t r = uf.find(x);
    component_min[r] = std::min(component_min[r], f[x]);
  }
  for (auto& p : diagram) {
    if (uf.find(*p.root) == *p.root) {
      p.death = component_min[*p.root];
      p.essential = true;
    }
  }
  return diagram;
}

Clustering cluster(const Graph& g, const ScalarField& f, double tau) {
  check_sizes(g, f);
  if (!(tau >= 0.0)) throw InputError("tau must be non-negative");
  const ScanOrder s = scan_order(f);
  UnionFind uf(f.size());

  sweep(
      g, s, uf,
      [&](std::size_t a, std::size_t b, Vertex x) { return std::min(f[a], f[b]) < f[x] + tau; },
      [](Vertex) {}, [](std::size_t, std::size_t, Vertex) {});

  const PersistenceDiagram full = compute_persistence(g, f);
  std::vector<std::size_t> point_of(f.size(), full.size());
  for (std::size_t i = 0; i < full.size(); ++i) point_of[*full[i].root] = i;

  Clustering c;
  c.labels.resize(f.size());
  std::vector<std::size_t> id_of_root(f.size(), f.size());
  for (const Vertex x : s.order) {
    const std::size_t r = uf.find(x);
    if (id_of_root[r] == f.size()) {
      id_of_root[r] = c.roots.size();
      c.roots.push_back(r);
      c.points.push_back(full[point_of[r]]);
    }
    c.labels[x] = id_of_root[r];
  }
  return c;
}

std::vector<Vertex> core(const Clustering& c, const ScalarField& f, std::size_t cluster_id,
                         double margin) {
  if (cluster_id >= c.size()) throw InputError("cluster id out of range");
  if (f.size() != c.labels.size()) throw InputError("field size does not match clustering");
  const double threshold = c.points[cluster_id].death + margin;
  std::vector<Vertex> out;
  for (Vertex x = 0; x < c.labels.size(); ++x) {
    if (c.labels[x] == cluster_id && f[x] >= threshold) out.push_back(x);
  }
  return out;
}

Relatedness check_related(const Clustering& c1, const ScalarField& f1, const Clustering& c2,
                          const ScalarField& f2, double epsilon) {
  if (c1.labels.size() != c2.labels.size()) throw InputError("clusterings cover different vertex sets");
  Relatedness out;
  if (c1.size() != c2.size()) {
    out.diagnostic = "cluster counts differ: " + std::to_string(c1.size()) + " vs " +
                     std::to_string(c2.size());
    return out;
  }
  const std::size_t k = c1.size();
  const double margin = 3.0 * epsilon;

  // contained_12[i * k + j]: core_1(i) lies inside cluster j of c2.
  std::vector<char> allowed(k * k, 1);
  std::vector<std::size_t> overlap(k * k, 0);
  for (Vertex x = 0; x < c1.labels.size(); ++x) overlap[c1.labels[x] * k + c2.labels[x]]++;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex x : core(c1, f1, i, margin)) {
      for (std::size_t j = 0; j < k; ++j) {
        if (c2.labels[x] != j) allowed[i * k + j] = 0;
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (Vertex x : core(c2, f2, j, margin)) {
      for (std::size_t i = 0; i < k; ++i) {
        if (c1.labels[x] != i) allowed[i * k + j] = 0;
      }
    }
  }

  // Among bijections made of allowed pairs, prefer large overlaps.
  CostMatrix m{k, std::vector<double>(k * k)};
  const double forbidden = static_cast<double>(c1.labels.size() + 1) * static_cast<double>(k + 1);
  for (std::size_t i = 0; i < k * k; ++i) {
    m.cost[i] = allowed[i] ? -static_cast<double>(overlap[i]) : forbidden;
  }
  const std::vector<std::size_t> assignment = solve_assignment(m);

  out.bijection = assignment;
  for (std::size_t i = 0; i < k; ++i) {
    if (!allowed[i * k + assignment[i]]) {
      out.bijection.clear();
      out.diagnostic = "no bijection keeps every core inside its paired cluster";
      return out;
    }
  }
  out.related = true;
  return out;
}

Relatedness check_related(const Clustering& c1, const ScalarField& f1, const Clustering& c2,
                          double epsilon) {
  return check_related(c1, f1, c2, f1, epsilon);
}

}  // namespace tomatomp
