#pragma once

#include <numeric>
#include <vector>

namespace mincut::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_;
    return true;
  }

  int components() const { return components_; }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = static_cast<int>(parent_.size());
  }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace mincut::detail
