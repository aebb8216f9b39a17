#include "tomatomp/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "tomatomp/error.hpp"
#include "tomatomp/multiparameter.hpp"
#include "tomatomp/parallel.hpp"

namespace tomatomp {

namespace {

struct Contingency {
  std::vector<double> row_sums, col_sums;
  // Nonzero cells only.
  std::vector<double> cells;
  std::vector<std::pair<std::size_t, std::size_t>> cell_index;
  double n = 0.0;
};

Contingency contingency(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw InputError("labelings cover different vertex sets");
  std::map<std::size_t, std::size_t> ra, rb;
  for (std::size_t x : a) ra.emplace(x, ra.size());
  for (std::size_t x : b) rb.emplace(x, rb.size());
  std::map<std::pair<std::size_t, std::size_t>, double> table;
  Contingency t;
  t.row_sums.assign(ra.size(), 0.0);
  t.col_sums.assign(rb.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t r = ra[a[i]], c = rb[b[i]];
    table[{r, c}] += 1.0;
    t.row_sums[r] += 1.0;
    t.col_sums[c] += 1.0;
  }
  for (const auto& [rc, v] : table) {
    t.cell_index.push_back(rc);
    t.cells.push_back(v);
  }
  t.n = static_cast<double>(a.size());
  return t;
}

double comb2(double x) { return x * (x - 1.0) / 2.0; }

// Equal as partitions: the contingency table is a permutation matrix pattern.
bool same_partition(const Contingency& t) {
  return t.cells.size() == t.row_sums.size() && t.cells.size() == t.col_sums.size();
}

double entropy(const std::vector<double>& sums, double n) {
  double h = 0.0;
  for (double s : sums) {
    if (s > 0) h -= (s / n) * std::log(s / n);
  }
  return h;
}

double expected_mutual_information(const Contingency& t) {
  const double n = t.n;
  const double lg_n = std::lgamma(n + 1.0);
  double emi = 0.0;
  for (double ai : t.row_sums) {
    for (double bj : t.col_sums) {
      const double lo = std::max(1.0, ai + bj - n);
      const double hi = std::min(ai, bj);
      const double base = std::lgamma(ai + 1) + std::lgamma(bj + 1) + std::lgamma(n - ai + 1) +
                          std::lgamma(n - bj + 1) - lg_n;
      for (double nij = lo; nij <= hi; nij += 1.0) {
        const double log_p = base - std::lgamma(nij + 1) - std::lgamma(ai - nij + 1) -
                             std::lgamma(bj - nij + 1) - std::lgamma(n - ai - bj + nij + 1);
        emi += (nij / n) * std::log(n * nij / (ai * bj)) * std::exp(log_p);
      }
    }
  }
  return emi;
}

}  // namespace

double ari(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const Contingency t = contingency(a, b);
  if (t.n <= 1.0) return 1.0;
  double index = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (double v : t.cells) index += comb2(v);
  for (double v : t.row_sums) sum_a += comb2(v);
  for (double v : t.col_sums) sum_b += comb2(v);
  const double expected = sum_a * sum_b / comb2(t.n);
  const double max_index = (sum_a + sum_b) / 2.0;
  // Both partitions all-singletons or both one cluster.
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

double ami(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const Contingency t = contingency(a, b);
  if (t.n == 0.0) return 1.0;
  if (t.row_sums.size() == 1 && t.col_sums.size() == 1) return 1.0;
  if (t.row_sums.size() == 1 || t.col_sums.size() == 1) {
    // One side trivial, the other not: no shared information.
    return 0.0;
  }
  if (same_partition(t)) return 1.0;
  double mi = 0.0;
  for (std::size_t k = 0; k < t.cells.size(); ++k) {
    const auto [r, c] = t.cell_index[k];
    const double nij = t.cells[k];
    mi += (nij / t.n) * std::log(t.n * nij / (t.row_sums[r] * t.col_sums[c]));
  }
  const double emi = expected_mutual_information(t);
  const double mean_h = (entropy(t.row_sums, t.n) + entropy(t.col_sums, t.n)) / 2.0;
  double denom = mean_h - emi;
  const double eps = std::numeric_limits<double>::epsilon();
  if (std::abs(denom) < eps) denom = denom < 0 ? -eps : eps;
  return (mi - emi) / denom;
}

Ranking make_ranking(std::vector<RankedItem> items) {
  std::sort(items.begin(), items.end(), [](const RankedItem& x, const RankedItem& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.id < y.id;
  });
  return items;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("score vectors differ in length");
  if (x.size() < 2) throw InputError("correlation needs at least two items");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw InputError("correlation undefined for zero variance");
  return sxy / std::sqrt(sxx * syy);
}

double pearson(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) throw InputError("rankings cover different items");
  std::unordered_map<std::string, double> score_b;
  for (const auto& item : b) score_b.emplace(item.id, item.score);
  std::vector<double> x, y;
  for (const auto& item : a) {
    const auto it = score_b.find(item.id);
    if (it == score_b.end()) throw InputError("item '" + item.id + "' missing from ranking");
    x.push_back(item.score);
    y.push_back(it->second);
  }
  return pearson(x, y);
}

double tophits(const Ranking& a, const Ranking& b, std::size_t k) {
  if (k == 0) throw InputError("tophits needs k >= 1");
  if (k > a.size() || k > b.size()) throw InputError("k exceeds the number of ranked items");
  std::unordered_set<std::string> top_a;
  for (std::size_t i = 0; i < k; ++i) top_a.insert(a[i].id);
  std::size_t shared = 0;
  for (std::size_t i = 0; i < k; ++i) shared += top_a.count(b[i].id);
  return static_cast<double>(shared) / static_cast<double>(k);
}

double coss_single(const PersistenceDiagram& d, CossMode mode) {
  double acc = 0.0;
  for (const auto& p : d) {
    const double pr = prominence(p);
    acc += mode == CossMode::SumOfSquares ? pr * pr : pr;
  }
  return mode == CossMode::SumOfSquares ? acc : acc * acc;
}

double coss_pair(const Clustering& c1, const Clustering& c2) {
  if (c1.labels.size() != c2.labels.size()) throw InputError("clusterings cover different vertex sets");
  if (c1.size() == 0 || c2.size() == 0) return 0.0;
  std::vector<double> inter(c1.size() * c2.size(), 0.0);
  std::vector<double> size1(c1.size(), 0.0), size2(c2.size(), 0.0);
  for (std::size_t x = 0; x < c1.labels.size(); ++x) {
    inter[c1.labels[x] * c2.size() + c2.labels[x]] += 1.0;
    size1[c1.labels[x]] += 1.0;
    size2[c2.labels[x]] += 1.0;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < c2.size(); ++j) {
      const double in = inter[i * c2.size() + j];
      const double un = size1[i] + size2[j] - in;
      if (un > 0) acc += in / un;
    }
  }
  return acc / static_cast<double>(c1.size() * c2.size());
}

double coss_multiparameter(const Decomposition& dec, double level, CossMode mode) {
  if (dec.diagrams.empty()) throw InputError("decomposition has no lines");
  std::vector<double> per_line;
  per_line.reserve(dec.diagrams.size());
  for (std::size_t l = 0; l < dec.diagrams.size(); ++l) {
    PersistenceDiagram d;
    for (const auto& ip : induced_diagram(dec, l)) d.push_back(ip.point);
    per_line.push_back(coss_single(d, mode));
  }
  return lower_quantile(per_line, level);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

Ranking rank_tuples(std::span<const NamedField> fields, const Graph& g, const RankOptions& options) {
  if (fields.empty()) throw InputError("no fields to rank");
  if (options.tuple_size == 0 || options.tuple_size > fields.size()) {
    throw InputError("tuple size must lie in [1, number of fields]");
  }
  if (options.pair_score == PairScore::Jaccard && options.tuple_size > 2) {
    throw InputError("the Jaccard score is defined for pairs only");
  }
  for (const auto& nf : fields) {
    if (nf.field.size() != g.n_vertices()) {
      throw InputError("field '" + nf.name + "' does not match the graph");
    }
  }

  std::vector<std::size_t> order(fields.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> var(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) var[i] = variance(fields[i].field.values());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return var[a] > var[b]; });
  if (options.top_variance > 0 && options.top_variance < order.size()) {
    order.resize(options.top_variance);
  }
  if (options.tuple_size > order.size()) throw InputError("tuple size exceeds the selected fields");
  std::sort(order.begin(), order.end());

  std::vector<ScalarField> selected;
  for (std::size_t i : order) {
    selected.push_back(options.rescale ? rescale_unit(fields[i].field) : fields[i].field);
  }

  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur;
  combinations(selected.size(), options.tuple_size, cur, 0, tuples);

  std::vector<RankedItem> items(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t t) {
    const auto& tuple = tuples[t];
    std::string id;
    std::vector<ScalarField> group;
    for (std::size_t i : tuple) {
      if (!id.empty()) id += '+';
      id += fields[order[i]].name;
      group.push_back(selected[i]);
    }
    double score = 0.0;
    if (group.size() == 1) {
      score = coss_single(compute_persistence(g, group[0]), options.coss);
    } else if (options.pair_score == PairScore::Jaccard) {
      score = coss_pair(cluster(g, group[0], options.tau), cluster(g, group[1], options.tau));
    } else {
      const Decomposition dec =
          build_decomposition(group, g, make_line_family(group, options.n_lines), options.q);
      score = coss_multiparameter(dec, options.quantile, options.coss);
    }
    items[t] = {std::move(id), score};
  });
  return make_ranking(std::move(items));
}

}  // namespace tomatomp
