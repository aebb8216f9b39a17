#include "tomatomp/assignment.hpp"

#include <algorithm>
#include <limits>

#include "tomatomp/error.hpp"

namespace tomatomp {

std::vector<std::size_t> solve_assignment(const CostMatrix& m) {
  const std::size_t n = m.n;
  if (m.cost.size() != n * n) throw InputError("cost matrix is not square");
  if (n == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();

  // Potentials u (rows) and v (columns); p[j] is the row matched to column j,
  // with 1-based indices and column 0 as the augmentation source.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = m(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> column_of_row(n);
  for (std::size_t j = 1; j <= n; ++j) column_of_row[p[j] - 1] = j - 1;
  return column_of_row;
}

namespace {

// Kuhn's augmenting paths; good enough for diagram-sized problems.
bool augment(std::size_t r, std::size_t n, const std::vector<char>& allowed,
             std::vector<char>& seen, std::vector<std::size_t>& row_of_col) {
  for (std::size_t c = 0; c < n; ++c) {
    if (!allowed[r * n + c] || seen[c]) continue;
    seen[c] = 1;
    if (row_of_col[c] == n || augment(row_of_col[c], n, allowed, seen, row_of_col)) {
      row_of_col[c] = r;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> max_bipartite_matching(std::size_t n, const std::vector<char>& allowed) {
  std::vector<std::size_t> row_of_col(n, n);
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(r, n, allowed, seen, row_of_col);
  }
  std::vector<std::size_t> col_of_row(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (row_of_col[c] != n) col_of_row[row_of_col[c]] = c;
  }
  return col_of_row;
}

std::vector<std::size_t> solve_bottleneck_assignment(const CostMatrix& m) {
  const std::size_t n = m.n;
  if (m.cost.size() != n * n) throw InputError("cost matrix is not square");
  if (n == 0) return {};
  std::vector<double> levels = m.cost;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<char> allowed(n * n);
  auto try_level = [&](double t) {
    for (std::size_t i = 0; i < n * n; ++i) allowed[i] = m.cost[i] <= t;
    auto match = max_bipartite_matching(n, allowed);
    const bool perfect = std::none_of(match.begin(), match.end(),
                                      [n](std::size_t c) { return c == n; });
    return std::make_pair(perfect, std::move(match));
  };

  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (try_level(levels[mid]).first) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return try_level(levels[lo]).second;
}

}  // namespace tomatomp
