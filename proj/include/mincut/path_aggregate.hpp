#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mincut/error.hpp"
#include "mincut/spanning_tree.hpp"

namespace mincut {

// Per-tree-edge values addressed by HLD position, supporting
//   path_add(u, v, x)    add x to every edge on the uv-path
//   nonpath_add(u, v, x) add x to every edge off the uv-path
//   query_min()          minimum logical value and smallest position attaining it
// Realized as a lazy range-add/range-min segment tree over the HLD order plus
// a global offset, so nonpath_add is offset += x; path_add(u, v, -x).
// Every path operation issues at most 2*ceil(log2 n) range operations.
template <typename T>
class PathAggregator {
 public:
  struct MinEntry {
    T value;
    int pos;
  };

  // edge_values is indexed by tree edge id; the constructor places each value
  // at its HLD position.
  PathAggregator(const HldIndex& h, std::span<const T> edge_values) : hld_(&h) {
    require(static_cast<int>(edge_values.size()) == h.edge_count(), errc::bad_argument,
            "one value per tree edge required");
    n_ = h.edge_count();
    min_.assign(static_cast<std::size_t>(4 * n_), T(0));
    add_.assign(static_cast<std::size_t>(4 * n_), T(0));
    leaf_.resize(static_cast<std::size_t>(n_));
    for (int e = 0; e < n_; ++e)
      leaf_[static_cast<std::size_t>(h.position_of(e) - 1)] = edge_values[static_cast<std::size_t>(e)];
    build(1, 0, n_ - 1);
  }

  void path_add(int u, int v, T x) {
    require(u != v, errc::bad_argument, "path endpoints must differ");
    hld_->path_intervals_into(u, v, scratch_);
    for (const PosInterval& iv : scratch_) range_add(iv.lo, iv.hi, x);
  }

  void nonpath_add(int u, int v, T x) {
    offset_ += x;
    path_add(u, v, -x);
  }

  void add_at(int pos, T x) { range_add(pos, pos, x); }

  MinEntry query_min() {
    ++ops_;
    // Argmin descent: ties resolve to the left, i.e. the smallest position.
    int node = 1, lo = 0, hi = n_ - 1;
    while (lo != hi) {
      int mid = (lo + hi) / 2;
      int l = 2 * node, r = 2 * node + 1;
      if (min_[static_cast<std::size_t>(l)] <= min_[static_cast<std::size_t>(r)]) {
        node = l;
        hi = mid;
      } else {
        node = r;
        lo = mid + 1;
      }
    }
    return {min_[1] + offset_, lo + 1};
  }

  // Point probe of the logical value at a position.
  T value_at(int pos) {
    ++ops_;
    int node = 1, lo = 0, hi = n_ - 1, target = pos - 1;
    T acc = offset_;
    while (lo != hi) {
      acc += add_[static_cast<std::size_t>(node)];
      int mid = (lo + hi) / 2;
      if (target <= mid) {
        node = 2 * node;
        hi = mid;
      } else {
        node = 2 * node + 1;
        lo = mid + 1;
      }
    }
    return acc + min_[static_cast<std::size_t>(node)];
  }

  T global_offset() const { return offset_; }
  int positions() const { return n_; }
  std::uint64_t op_count() const { return ops_; }

 private:
  void build(int node, int lo, int hi) {
    if (lo == hi) {
      min_[static_cast<std::size_t>(node)] = leaf_[static_cast<std::size_t>(lo)];
      return;
    }
    int mid = (lo + hi) / 2;
    build(2 * node, lo, mid);
    build(2 * node + 1, mid + 1, hi);
    min_[static_cast<std::size_t>(node)] =
        std::min(min_[static_cast<std::size_t>(2 * node)], min_[static_cast<std::size_t>(2 * node + 1)]);
  }

  void range_add(int l, int r, T x) {
    ++ops_;
    range_add_rec(1, 0, n_ - 1, l - 1, r - 1, x);
  }

  void range_add_rec(int node, int lo, int hi, int l, int r, T x) {
    if (r < lo || hi < l) return;
    if (l <= lo && hi <= r) {
      add_[static_cast<std::size_t>(node)] += x;
      min_[static_cast<std::size_t>(node)] += x;
      return;
    }
    int mid = (lo + hi) / 2;
    range_add_rec(2 * node, lo, mid, l, r, x);
    range_add_rec(2 * node + 1, mid + 1, hi, l, r, x);
    min_[static_cast<std::size_t>(node)] =
        std::min(min_[static_cast<std::size_t>(2 * node)], min_[static_cast<std::size_t>(2 * node + 1)]) +
        add_[static_cast<std::size_t>(node)];
  }

  const HldIndex* hld_;
  int n_ = 0;
  std::vector<T> min_, add_, leaf_;
  T offset_ = T(0);
  std::uint64_t ops_ = 0;
  std::vector<PosInterval> scratch_;
};

}  // namespace mincut
