// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <unistd.h>

#include "oracles/oracles.hpp"
#include "support/synthetic.hpp"
#include "tomatomp/tomatomp.hpp"

using namespace tomatomp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  synth::Rng rng(101);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + synth::pick(rng, 30);
    const Graph g = synth::random_connected_graph(rng, n, synth::pick(rng, n + 1));
    const ScalarField f = synth::injective_field(rng, n);
    mismatches += compute_persistence(g, f) != oracle::superlevel_persistence(g, f);
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 10.0,
          fmt("%.0f of 200 graphs differ from the oracle, %.2f s", mismatches, secs)};
}

Outcome stability() {
  synth::Rng rng(102);
  double worst = -kInfinity;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + synth::pick(rng, 40);
    const Graph g = synth::random_connected_graph(rng, n, synth::pick(rng, n));
    const ScalarField f = synth::injective_field(rng, n);
    const double eps = synth::uniform(rng, 0.01, 0.5);
    const ScalarField h = synth::perturb(rng, f, eps);
    const double d = bottleneck_distance(compute_persistence(g, f), compute_persistence(g, h));
    worst = std::max(worst, d - eps);
  }
  return {worst <= 1e-9, fmt("max of d_b - eps over 200 triples = %.3g", worst)};
}

Outcome line_stability() {
  synth::Rng rng(103);
  double worst = -kInfinity;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 3 + synth::pick(rng, 40);
    const Graph g = synth::random_connected_graph(rng, n, synth::pick(rng, n));
    const std::vector<ScalarField> fs{synth::injective_field(rng, n), synth::injective_field(rng, n)};
    const double c = synth::uniform(rng, -0.6, 0.6);
    const double eta = synth::uniform(rng, 0.001, 0.3);
    const DiagonalLine a({c, -c});
    const DiagonalLine b({c + eta, -c - eta});
    const double d = bottleneck_distance(compute_persistence(g, sliced_field(fs, a)),
                                         compute_persistence(g, sliced_field(fs, b)));
    worst = std::max(worst, d - a.distance(b));
  }
  return {worst <= 1e-9, fmt("max of d_b - eta over 100 line pairs = %.3g", worst)};
}

PersistenceDiagram small_diagram(synth::Rng& rng) {
  PersistenceDiagram d;
  const std::size_t k = synth::pick(rng, 5);
  for (std::size_t i = 0; i < k; ++i) {
    const double death = synth::uniform(rng, 0.0, 1.0);
    const double pr = synth::pick(rng, 8) == 0 ? 0.0 : synth::uniform(rng, 0.0, 1.0);
    d.push_back({death + pr, death, std::nullopt, false});
  }
  return d;
}

Outcome bottleneck_correctness() {
  synth::Rng rng(104);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto a = small_diagram(rng);
    const auto b = small_diagram(rng);
    worst = std::max(worst, std::abs(bottleneck_distance(a, b) -
                                     oracle::brute_force_distance(a, b, kInfinity)));
  }
  return {worst <= 1e-12, fmt("max deviation from enumeration over 500 pairs = %.3g", worst)};
}

// Path with two Gaussian bumps per field; the left bump is the higher one on
// every diagonal line. Low-amplitude noise adds small-prominence points.
struct TwoModeInstance {
  Graph g;
  std::vector<ScalarField> fields;
};

TwoModeInstance two_mode_instance() {
  const std::size_t n = 200;
  synth::Rng rng(105);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  std::vector<double> f1(n), f2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    const double left = std::exp(-(x - 50) * (x - 50) / 200.0);
    const double right = std::exp(-(x - 150) * (x - 150) / 200.0);
    f1[i] = 1.0 * left + 0.6 * right + synth::uniform(rng, -0.002, 0.002);
    f2[i] = 1.0 * left + 0.8 * right + synth::uniform(rng, -0.002, 0.002);
  }
  return {Graph(n, edges), {ScalarField(f1), ScalarField(f2)}};
}

// Points with prominence >= high, per line.
std::vector<std::vector<std::size_t>> prominent_points(const Decomposition& dec, double high) {
  std::vector<std::vector<std::size_t>> out(dec.diagrams.size());
  for (std::size_t l = 0; l < dec.diagrams.size(); ++l) {
    for (std::size_t j = 0; j < dec.diagrams[l].size(); ++j) {
      if (prominence(dec.diagrams[l][j]) >= high) out[l].push_back(j);
    }
  }
  return out;
}

Outcome two_mode_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const TwoModeInstance inst = two_mode_instance();
  const LineFamily family = make_line_family(inst.fields, 100);
  const double d1 = 0.02, d2 = 0.5;

  const Decomposition dec2 = build_decomposition(inst.fields, inst.g, family, 2.0);
  // Premises: separation on every line, two prominent points each, and
  // eta small against both the band and the gap between prominent points.
  for (std::size_t l = 0; l < dec2.diagrams.size(); ++l) {
    if (!is_separated(dec2.diagrams[l], d1, d2)) {
      return {false, "premise: line " + std::to_string(l) + " is not (d1,d2)-separated"};
    }
  }
  const auto prominent = prominent_points(dec2, d2);
  for (const auto& p : prominent) {
    if (p.size() != 2) return {false, "premise: a line lacks exactly two prominent points"};
  }
  const double gap = separation_gap(dec2.diagrams, d2);
  if (!(family.eta <= std::min((d2 - d1) / 16.0, gap))) {
    return {false, fmt("premise: eta %.4g exceeds min((d2-d1)/16, d*) with d* = %.4g", family.eta, gap)};
  }

  // (i) restricted matchings: bijections on prominent points, equal across q.
  std::vector<std::vector<std::vector<std::size_t>>> restricted;
  for (double q : {1.0, 2.0, kInfinity}) {
    const Decomposition dec = assemble_decomposition(family, dec2.diagrams, q);
    std::vector<std::vector<std::size_t>> per_line;
    for (std::size_t l = 0; l + 1 < dec.diagrams.size(); ++l) {
      std::vector<std::size_t> image;
      std::vector<char> hit(dec.diagrams[l + 1].size(), 0);
      for (std::size_t j : prominent[l]) {
        const auto to = dec.matchings[l].image[j];
        if (!to || prominence(dec.diagrams[l + 1][*to]) < d2 || hit[*to]) {
          return {false, "(i) matching is not a bijection of prominent points at line " +
                             std::to_string(l) + " for q = " + fmt("%g", q)};
        }
        hit[*to] = 1;
        image.push_back(*to);
      }
      per_line.push_back(image);
    }
    restricted.push_back(per_line);
  }
  if (restricted[0] != restricted[1] || restricted[1] != restricted[2]) {
    return {false, "(i) restricted matchings differ between q = 1, 2, inf"};
  }

  // (ii) two output clusters at a tau inside the band.
  const double tau = (d1 + d2) / 2.0;
  const MultiParameterResult mp = cluster_multiparameter(inst.fields, inst.g, tau, family, 2.0);
  if (mp.clustering.size() != 2) {
    return {false, "(ii) expected 2 clusters, got " + std::to_string(mp.clustering.size())};
  }

  // (iii) the intersection over lines of each summand's cores lies inside
  // the output cluster of that summand.
  const double margin = 3.0 * family.eta;
  std::size_t core_size = 0;
  for (std::size_t k = 0; k < mp.clustering.size(); ++k) {
    const std::size_t s = mp.cluster_summand[k];
    std::vector<char> in_all(inst.g.n_vertices(), 1);
    for (std::size_t l = 0; l < family.size(); ++l) {
      const Clustering& c = mp.line_clusterings[l];
      const auto labels = summand_labels(c, mp.decomposition, l);
      std::vector<char> here(inst.g.n_vertices(), 0);
      for (std::size_t id = 0; id < c.size(); ++id) {
        if (labels[c.roots[id]] != s) continue;
        for (Vertex x : core(c, mp.sliced[l], id, margin)) here[x] = 1;
      }
      for (Vertex x = 0; x < here.size(); ++x) in_all[x] = in_all[x] && here[x];
    }
    for (Vertex x = 0; x < in_all.size(); ++x) {
      if (!in_all[x]) continue;
      ++core_size;
      if (mp.clustering.labels[x] != k) {
        return {false, "(iii) core vertex " + std::to_string(x) + " left its cluster"};
      }
    }
  }
  const double secs = seconds_since(t0);
  if (core_size == 0) return {false, "(iii) every core intersection is empty"};
  return {secs < 30.0, fmt("eta %.4f, d* %.3f, %.0f core vertices contained", family.eta, gap,
                           static_cast<double>(core_size))};
}

Outcome majority_robustness() {
  const TwoModeInstance inst = two_mode_instance();
  const MultiParameterResult mp = cluster_multiparameter(inst.fields, inst.g, 0.26, 100);
  std::vector<std::vector<std::size_t>> labels;
  std::size_t max_summand = 0;
  for (std::size_t l = 0; l < mp.line_clusterings.size(); ++l) {
    labels.push_back(summand_labels(mp.line_clusterings[l], mp.decomposition, l));
    for (std::size_t s : labels.back()) max_summand = std::max(max_summand, s);
  }
  const std::size_t lines = labels.size();
  const std::size_t n = labels.front().size();
  std::vector<char> unanimous(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& l : labels) unanimous[x] = unanimous[x] && l[x] == labels.front()[x];
  }
  const auto clean = majority_vote(labels).winner;
  const std::size_t bad = lines / 2 - 1;
  synth::Rng rng(106);
  std::size_t changed = 0, checked = 0;
  for (int pattern = 0; pattern < 50; ++pattern) {
    auto corrupt = labels;
    const std::size_t start = synth::pick(rng, lines - bad + 1);
    for (std::size_t l = start; l < start + bad; ++l) {
      for (auto& s : corrupt[l]) s = synth::pick(rng, max_summand + 3);
    }
    const auto w = majority_vote(corrupt).winner;
    for (std::size_t x = 0; x < n; ++x) {
      if (!unanimous[x]) continue;
      ++checked;
      changed += w[x] != clean[x];
    }
  }
  return {changed == 0 && checked > 0,
          fmt("%.0f of %.0f unanimous labels changed under %.0f corrupted lines", changed,
              static_cast<double>(checked), static_cast<double>(bad))};
}

Outcome outlier_pipeline() {
  int pipeline_ok = 0, plain_low = 0, spikes_targeted = 0;
  double worst_pipeline = 1.0, best_plain = -1.0;
  for (int trial = 0; trial < 10; ++trial) {
    synth::Rng rng(1000 + trial);
    const synth::Blobs b = synth::two_blobs(rng);
    const Graph g = neighborhood_graph(b.cloud, 0.3);
    const auto spikes = synth::spread_vertices(rng, g, 10);
    if (spikes.size() != 10) return {false, "could not place 10 spikes"};
    std::vector<double> v(b.f.values().begin(), b.f.values().end());
    for (Vertex x : spikes) v[x] = 3.0;
    const ScalarField corrupted(v);

    OutlierOptions o;
    o.tau = 0.3;
    o.n_lines = 100;
    const OutlierResult r = pipeline_outlier_robust(g, corrupted, o);
    bool all_targeted = true;
    for (Vertex x : spikes) {
      all_targeted = all_targeted &&
                     std::find(r.targets.begin(), r.targets.end(), x) != r.targets.end();
    }
    spikes_targeted += all_targeted;
    const double a_mp = ari(b.truth, r.clustering.labels);
    const double a_plain = ari(b.truth, cluster(g, corrupted, o.tau).labels);
    pipeline_ok += a_mp >= 0.95;
    plain_low += a_plain <= 0.8;
    worst_pipeline = std::min(worst_pipeline, a_mp);
    best_plain = std::max(best_plain, a_plain);
  }
  return {pipeline_ok == 10 && plain_low >= 8 && spikes_targeted == 10,
          fmt("pipeline ARI >= 0.95 on %.0f/10 (min %.3f), plain ARI <= 0.8 on ", pipeline_ok,
              worst_pipeline) +
              fmt("%.0f/10 (max %.3f), spikes augmented in %.0f/10", plain_low, best_plain,
                  spikes_targeted)};
}

Outcome graph_free_pipeline() {
  int runs = 0, perfect = 0;
  double worst = 1.0;
  for (int trial = 0; trial < 3; ++trial) {
    synth::Rng rng(1000 + trial);
    const synth::Blobs b = synth::two_blobs(rng);
    std::vector<double> dists;
    for (std::size_t i = 0; i < b.cloud.size(); ++i) {
      for (std::size_t j = i + 1; j < b.cloud.size(); ++j) dists.push_back(b.cloud.distance(i, j));
    }
    for (double level : {0.01, 0.02, 0.03, 0.04, 0.05}) {
      GraphFreeOptions o;
      o.delta_max = lower_quantile(dists, level);
      o.tau = 0.3;
      o.n_lines = 50;
      const double a = ari(b.truth, pipeline_graph_free(b.cloud, b.f, o).clustering.labels);
      ++runs;
      perfect += a == 1.0;
      worst = std::min(worst, a);
    }
  }
  return {perfect == runs, fmt("ARI = 1 on %.0f/%.0f runs (min %.3f)", perfect, runs, worst)};
}

Outcome metric_units() {
  const std::vector<std::size_t> a{0, 0, 1, 1}, b{0, 1, 0, 1};
  const double r = ari(a, b);
  const std::vector<double> x{1, 2, 3}, y{1, 2, 4};
  const double p = pearson(x, y);
  std::vector<RankedItem> ra, rb;
  for (int i = 0; i < 10; ++i) {
    ra.push_back({"a" + std::to_string(i), 10.0 - i});
    rb.push_back({(i < 4 ? "a" : "b") + std::to_string(i), 10.0 - i});
  }
  const double t = tophits(make_ranking(ra), make_ranking(rb), 10);
  return {std::abs(r + 0.5) <= 1e-12 && std::abs(p - 0.98198) <= 1e-4 && t == 0.4,
          fmt("ari %.15g, pearson %.6f, tophits %.2f", r, p, t)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path work = fs::temp_directory_path() / ("tomatomp_accept_" + std::to_string(::getpid()));
  fs::remove_all(work);
  fs::create_directories(work);
  // A dataset written here so the run does not depend on the working directory.
  synth::Rng rng(107);
  const synth::Blobs b = synth::two_blobs(rng);
  {
    std::ofstream csv(work / "blobs.csv");
    csv.precision(17);
    csv << "x,y,density,second\n";
    for (std::size_t i = 0; i < b.cloud.size(); ++i) {
      csv << b.cloud[i][0] << "," << b.cloud[i][1] << "," << b.f[i] << ","
          << b.f[i] * 0.5 + 0.1 * b.cloud[i][1] << "\n";
    }
  }
  std::vector<std::map<std::string, std::string>> runs;
  for (int i = 0; i < 2; ++i) {
    const fs::path out = work / ("run" + std::to_string(i));
    const std::string cmd = std::string("\"") + TOMATOMP_CLI_PATH + "\" cluster-mp --input \"" +
                            (work / "blobs.csv").string() +
                            "\" --field density,second --delta 0.3 --tau 0.2 --n-lines 40"
                            " --seed 7 --out \"" + out.string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      fs::remove_all(work);
      return {false, "cluster-mp run failed"};
    }
    std::map<std::string, std::string> files;
    for (const auto& e : fs::directory_iterator(out)) files[e.path().filename().string()] = slurp(e.path());
    runs.push_back(std::move(files));
  }
  fs::remove_all(work);
  if (runs[0].size() < 4) return {false, "expected at least 4 artifacts"};
  return {runs[0] == runs[1],
          fmt("%.0f artifacts compared byte for byte", static_cast<double>(runs[0].size()))};
}

}  // namespace

int main() {
  report("C1", "oracle equivalence", oracle_equivalence);
  report("C2", "stability", stability);
  report("C3", "line stability", line_stability);
  report("C4", "bottleneck correctness", bottleneck_correctness);
  report("C5", "two-mode suite", two_mode_suite);
  report("C6", "majority robustness", majority_robustness);
  report("C7", "outlier pipeline", outlier_pipeline);
  report("C8", "graph-free pipeline", graph_free_pipeline);
  report("C9", "metric unit values", metric_units);
  report("C10", "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
