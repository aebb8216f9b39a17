#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace tomatomp {

// Disjoint sets with path halving. No union-by-rank: callers decide which
// representative survives, since the elder rule needs the older root on top.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Attaches the set of `child` below the set of `parent`; returns the new root.
  std::size_t link(std::size_t child, std::size_t parent) noexcept {
    const std::size_t c = find(child);
    const std::size_t p = find(parent);
    parent_[c] = p;
    return p;
  }

  bool same(std::size_t a, std::size_t b) noexcept { return find(a) == find(b); }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace tomatomp
