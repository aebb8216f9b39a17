#include "tomatomp/diagrams.hpp"

#include <algorithm>
#include <cmath>

#include "tomatomp/assignment.hpp"
#include "tomatomp/error.hpp"

namespace tomatomp {

std::vector<double> prominences(const PersistenceDiagram& d) {
  std::vector<double> out;
  out.reserve(d.size());
  for (const auto& p : d) out.push_back(prominence(p));
  return out;
}

double point_distance(const DiagramPoint& a, const DiagramPoint& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_distance(const DiagramPoint& p) { return std::abs(prominence(p)) / 2.0; }

namespace {

void check_q(double q) {
  if (!(q >= 1.0)) throw InputError("diagram distance needs q >= 1");
}

double raise(double x, double q) {
  if (std::isinf(q) || q == 1.0) return x;
  if (q == 2.0) return x * x;
  return std::pow(x, q);
}

std::vector<std::size_t> off_diagonal(const PersistenceDiagram& d) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (diagonal_distance(d[i]) > 0.0) idx.push_back(i);
  }
  return idx;
}

}  // namespace

double correspondence_cost(const PersistenceDiagram& a, const PersistenceDiagram& b,
                           const PartialCorrespondence& c, double q) {
  check_q(q);
  std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
  double acc = 0.0;
  auto add = [&](double x) { acc = std::isinf(q) ? std::max(acc, x) : acc + raise(x, q); };
  for (const auto& [i, j] : c.matched) {
    if (i >= a.size() || j >= b.size() || used_a[i] || used_b[j]) {
      throw InputError("correspondence is not injective or out of range");
    }
    used_a[i] = used_b[j] = 1;
    add(point_distance(a[i], b[j]));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!used_a[i]) add(diagonal_distance(a[i]));
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!used_b[j]) add(diagonal_distance(b[j]));
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

DiagramDistance diagram_distance(const PersistenceDiagram& a, const PersistenceDiagram& b,
                                 double q) {
  check_q(q);
  const std::vector<std::size_t> ia = off_diagonal(a);
  const std::vector<std::size_t> ib = off_diagonal(b);
  const std::size_t n = ia.size();
  const std::size_t m = ib.size();

  // Rows: points of a, then diagonal slots for b. Columns: points of b, then
  // diagonal slots for a. Any diagonal slot serves any point, so the blocks
  // can be dense without changing the optimum.
  CostMatrix cm{n + m, std::vector<double>((n + m) * (n + m), 0.0)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) cm(r, c) = raise(point_distance(a[ia[r]], b[ib[c]]), q);
    const double to_diag = raise(diagonal_distance(a[ia[r]]), q);
    for (std::size_t c = m; c < m + n; ++c) cm(r, c) = to_diag;
  }
  for (std::size_t c = 0; c < m; ++c) {
    const double to_diag = raise(diagonal_distance(b[ib[c]]), q);
    for (std::size_t r = n; r < n + m; ++r) cm(r, c) = to_diag;
  }

  const std::vector<std::size_t> assignment =
      std::isinf(q) ? solve_bottleneck_assignment(cm) : solve_assignment(cm);

  DiagramDistance out;
  for (std::size_t r = 0; r < n; ++r) {
    if (assignment[r] < m) out.correspondence.matched.emplace_back(ia[r], ib[assignment[r]]);
  }
  out.distance = correspondence_cost(a, b, out.correspondence, q);
  return out;
}

bool is_separated(const PersistenceDiagram& d, double low, double high) {
  if (!(low >= 0.0)) throw InputError("separation band needs low >= 0");
  if (!(low < high)) throw InputError("separation band needs low < high");
  return std::none_of(d.begin(), d.end(), [&](const DiagramPoint& p) {
    const double pr = prominence(p);
    return pr > low && pr < high;
  });
}

double separation_gap(std::span<const PersistenceDiagram> diagrams, double high) {
  double best = kInfinity;
  for (const auto& d : diagrams) {
    std::vector<std::size_t> prominent;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (prominence(d[i]) >= high) prominent.push_back(i);
    }
    for (std::size_t x = 0; x < prominent.size(); ++x) {
      for (std::size_t y = x + 1; y < prominent.size(); ++y) {
        best = std::min(best, point_distance(d[prominent[x]], d[prominent[y]]) / 2.0);
      }
    }
  }
  return best;
}

}  // namespace tomatomp
