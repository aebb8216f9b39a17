#pragma once

#include <cstddef>
#include <vector>

namespace tomatomp {

// Dense row-major square cost matrix.
struct CostMatrix {
  std::size_t n = 0;
  std::vector<double> cost;

  double operator()(std::size_t r, std::size_t c) const { return cost[r * n + c]; }
  double& operator()(std::size_t r, std::size_t c) { return cost[r * n + c]; }
};

// Minimum-cost perfect assignment (Hungarian method with potentials, O(n^3)).
// Returns column_of_row.
std::vector<std::size_t> solve_assignment(const CostMatrix& m);

// Minimum-bottleneck perfect assignment: binary search over the distinct
// costs, checking for a perfect matching on entries <= threshold.
// Returns column_of_row.
std::vector<std::size_t> solve_bottleneck_assignment(const CostMatrix& m);

// Maximum bipartite matching restricted to allowed[r * n + c]; returns
// column_of_row with n (no column) for unmatched rows.
std::vector<std::size_t> max_bipartite_matching(std::size_t n,
                                                const std::vector<char>& allowed);

}  // namespace tomatomp
