#include <algorithm>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "support/synthetic.hpp"
#include "tomatomp/diagrams.hpp"
#include "tomatomp/error.hpp"
#include "tomatomp/tomato.hpp"

using namespace tomatomp;

namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
  return Graph(n, e);
}

// On a graph the statement needs more than a band: if two peaks are within
// 2 eps the elder swaps, and a saddle vertex whose two upper neighbors are
// that close can hand its whole downstream tree to the other cluster, inside
// the elder's core. Keep instances where neither can happen.
bool stable_attachments(const Graph& g, const ScalarField& f, double eps) {
  std::vector<double> peaks;
  for (Vertex x = 0; x < g.n_vertices(); ++x) {
    double top = -kInfinity, second = -kInfinity;
    for (const auto& nb : g.neighbors(x)) {
      const double v = f[nb.vertex];
      if (std::abs(v - f[x]) <= 2 * eps) return false;
      if (v < f[x]) continue;
      if (v > top) {
        second = top;
        top = v;
      } else if (v > second) {
        second = v;
      }
    }
    if (top - second <= 2 * eps) return false;
    if (top == -kInfinity) peaks.push_back(f[x]);
  }
  std::sort(peaks.begin(), peaks.end());
  for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
    if (peaks[i + 1] - peaks[i] <= 2 * eps) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("path with two peaks") {
  const Graph g = path(5);
  const ScalarField f({1, 3, 2, 4, 1});
  const auto d = compute_persistence(g, f);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == DiagramPoint{4, 1, 3, true});
  CHECK(d[1] == DiagramPoint{3, 2, 1, false});

  const Clustering c0 = cluster(g, f, 0.0);
  CHECK(c0.size() == 2);
  CHECK(c0.labels == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(c0.roots == std::vector<Vertex>{3, 1});

  // prominence 1 survives tau = 1 (the gate is strict) and dies above it
  CHECK(cluster(g, f, 1.0).size() == 2);
  const Clustering c2 = cluster(g, f, 1.01);
  CHECK(c2.size() == 1);
  CHECK(c2.points[0].essential);
}

TEST_CASE("plateau gives zero-prominence points") {
  const Graph g = path(3);
  const ScalarField f({2, 2, 2});
  const auto d = compute_persistence(g, f);
  REQUIRE(d.size() == 1);
  CHECK(d[0].root == Vertex{0});
  CHECK(prominence(d[0]) == 0.0);

  // equal peaks: the lower index is the elder
  const Graph g2(3, {{0, 1, 1}, {1, 2, 1}});
  const ScalarField f2({2, 1, 2});
  const auto d2 = compute_persistence(g2, f2);
  REQUIRE(d2.size() == 2);
  CHECK(d2[1].root == Vertex{2});
  CHECK(d2[1].death == 1.0);
}

TEST_CASE("disconnected graph has one essential point per component") {
  const Graph g(4, {{0, 1, 1}, {2, 3, 1}});
  const ScalarField f({1, 5, 2, 3});
  const auto d = compute_persistence(g, f);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == DiagramPoint{5, 1, 1, true});
  CHECK(d[1] == DiagramPoint{3, 2, 3, true});
  CHECK(cluster(g, f, 100.0).size() == 2);
}

TEST_CASE("size mismatches and negative tau are rejected") {
  const Graph g = path(3);
  CHECK_THROWS_AS(compute_persistence(g, ScalarField({1.0})), InputError);
  CHECK_THROWS_AS(cluster(g, ScalarField({1, 2, 3}), -0.5), InputError);
}

TEST_CASE("persistence matches the component-tracking oracle") {
  synth::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + synth::pick(rng, 25);
    const Graph g = synth::random_connected_graph(rng, n, synth::pick(rng, n));
    const ScalarField f = trial % 2 ? synth::injective_field(rng, n) : synth::tied_field(rng, n, 4);
    CHECK(compute_persistence(g, f) == oracle::superlevel_persistence(g, f));
  }
}

TEST_CASE("cluster count equals the number of points at or above tau") {
  synth::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + synth::pick(rng, 30);
    const Graph g = synth::random_connected_graph(rng, n, synth::pick(rng, n));
    const ScalarField f = trial % 3 ? synth::injective_field(rng, n) : synth::tied_field(rng, n, 3);
    const auto d = compute_persistence(g, f);
    for (double tau : {0.0, 0.05, 0.2, 0.5, 1.0, 2.0}) {
      const Clustering c = cluster(g, f, tau);
      CHECK(c.size() == oracle::surviving_modes(d, tau));
      // labels are a valid partition and each root is its cluster's maximum
      for (std::size_t k = 0; k < c.size(); ++k) {
        const auto m = c.members(k);
        REQUIRE_FALSE(m.empty());
        CHECK(c.labels[c.roots[k]] == k);
        for (Vertex x : m) CHECK(f[x] <= f[c.roots[k]]);
      }
    }
  }
}

TEST_CASE("clusters are connected") {
  synth::Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + synth::pick(rng, 20);
    const Graph g = synth::random_connected_graph(rng, n, 3);
    const ScalarField f = synth::injective_field(rng, n);
    const Clustering c = cluster(g, f, 0.2);
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::vector<Edge> inner;
      for (const Edge& e : g.edges()) {
        if (c.labels[e.u] == k && c.labels[e.v] == k) inner.push_back(e);
      }
      const auto comp = connected_components(Graph(n, inner));
      for (Vertex x : c.members(k)) CHECK(comp[x] == comp[c.roots[k]]);
    }
  }
}

TEST_CASE("cores and relatedness") {
  const Graph g = path(5);
  const ScalarField f({1, 3, 2, 4, 1});
  const Clustering c = cluster(g, f, 0.0);
  // cluster 1 (root 1) dies at 2; margin 0.5 keeps only its peak
  CHECK(core(c, f, 1, 0.5) == std::vector<Vertex>{1});
  CHECK(core(c, f, 0, 0.0) == std::vector<Vertex>{2, 3, 4});
  CHECK_THROWS_AS(core(c, f, 5, 0.0), InputError);

  CHECK(check_related(c, f, c, 0.0).related);

  // same partition with ids swapped still relates through the bijection
  Clustering swapped = c;
  for (auto& l : swapped.labels) l = 1 - l;
  std::swap(swapped.roots[0], swapped.roots[1]);
  std::swap(swapped.points[0], swapped.points[1]);
  const Relatedness r = check_related(c, f, swapped, 0.0);
  REQUIRE(r.related);
  CHECK(r.bijection == std::vector<std::size_t>{1, 0});

  const Clustering merged = cluster(g, f, 5.0);
  const Relatedness bad = check_related(c, f, merged, 0.0);
  CHECK_FALSE(bad.related);
  CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("perturbed clusterings are related away from the band") {
  synth::Rng rng(14);
  int checked = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const std::size_t n = 6 + synth::pick(rng, 20);
    const Graph g = synth::random_connected_graph(rng, n, 4);
    const ScalarField f = synth::injective_field(rng, n);
    const double eps = synth::uniform(rng, 0.001, 0.02);
    const ScalarField h = synth::perturb(rng, f, eps);
    const double tau = synth::uniform(rng, 0.17, 0.5);
    // the band around tau must be at least 16 eps wide
    const double d1 = tau - 8 * eps, d2 = tau + 8 * eps;
    const auto d = compute_persistence(g, f);
    if (!is_separated(d, d1, d2)) continue;
    bool touches = false;
    for (const auto& p : d) touches = touches || std::abs(prominence(p) - d1) < 1e-12 ||
                                      std::abs(prominence(p) - d2) < 1e-12;
    if (touches || !stable_attachments(g, f, eps)) continue;
    ++checked;
    const Clustering c1 = cluster(g, f, tau);
    const Clustering c2 = cluster(g, h, tau);
    CHECK(check_related(c1, f, c2, h, eps).related);
  }
  CHECK(checked > 100);
}
