#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mincut/detail/union_find.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/spanning_tree.hpp"

namespace mincut {

// Greedy weighted spanning-tree packing: repeat MST under edge loads,
// incrementing the load of each chosen edge by delta = 1/denom, until some
// load exceeds 1. Each integer-weighted edge is treated as `capacity`
// parallel unit edges; only the minimum-load copy of a class is ever offered
// to the MST, and its copies always occupy at most two adjacent load values,
// so a class is summarized by (level, copies remaining at level).
//
// Loads are stored as integer multiples of delta, which makes the stopping
// test and the feasibility accounting exact.
class Packing {
 public:
  struct TreeEntry {
    std::vector<int> classes;  // sorted class ids
    std::int64_t units = 0;    // tree weight = units * delta
  };

  int n = 0;
  std::vector<IntEdge> class_edges;  // endpoints + capacity per class
  std::vector<int> class_source;    // class -> edge id of the source IntGraph
  std::vector<TreeEntry> trees;     // distinct trees in first-found order
  std::int64_t weight_units = 0;    // W = weight_units * delta
  std::int64_t denom = 1;           // delta = 1/denom
  std::int64_t expanded_edges = 0;  // parallel-expanded edge count m'
  std::uint64_t mst_calls = 0;
  double eps3 = 0.2;

  double delta() const { return 1.0 / static_cast<double>(denom); }
  double weight() const { return static_cast<double>(weight_units) / static_cast<double>(denom); }
  int distinct_tree_count() const { return static_cast<int>(trees.size()); }

  RootedTree build_tree(int idx) const {
    const TreeEntry& t = trees[static_cast<std::size_t>(idx)];
    std::vector<std::pair<int, int>> ends;
    std::vector<int> ids;
    std::vector<double> ws;
    for (int c : t.classes) {
      ends.push_back({class_edges[static_cast<std::size_t>(c)].u,
                      class_edges[static_cast<std::size_t>(c)].v});
      ids.push_back(c);
      ws.push_back(static_cast<double>(class_edges[static_cast<std::size_t>(c)].w));
    }
    return make_rooted_tree(n, ends, ids, ws);
  }
};

inline std::uint64_t mst_call_count(const Packing& p) { return p.mst_calls; }

// Exact feasibility audit: for every class, the total units of trees using it
// must not exceed capacity * denom (i.e. total tree weight <= edge weight).
inline bool packing_feasible(const Packing& p) {
  std::vector<std::int64_t> used(p.class_edges.size(), 0);
  for (const Packing::TreeEntry& t : p.trees)
    for (int c : t.classes) used[static_cast<std::size_t>(c)] += t.units;
  for (std::size_t c = 0; c < used.size(); ++c)
    if (used[c] > p.class_edges[c].w * p.denom) return false;
  return true;
}

inline Packing pack_trees(const IntGraph& h, double eps3 = 0.2) {
  require(h.n >= 2, errc::bad_argument, "packing needs at least two vertices");
  require(!h.edges.empty(), errc::bad_argument, "packing needs at least one edge");
  require(eps3 > 0.0 && eps3 < 1.0, errc::bad_argument, "eps3 must be in (0,1)");
  for (const IntEdge& e : h.edges)
    require(e.w >= 1, errc::bad_argument, "multigraph capacities must be positive");
  require(h.connected(), errc::disconnected, "cannot pack a disconnected graph");

  Packing p;
  p.n = h.n;
  p.class_edges = h.edges;
  p.class_source = h.source;
  p.eps3 = eps3;
  p.expanded_edges = h.expanded_edge_count();
  p.denom = std::max<std::int64_t>(
      static_cast<std::int64_t>(std::floor(3.0 * std::log(static_cast<double>(p.expanded_edges)) /
                                           (eps3 * eps3))),
      1);
  const std::int64_t K = p.denom;
  const int n = h.n;
  const int m = static_cast<int>(h.edges.size());

  // Parallel-class state: `remaining` copies sit at `level`, the rest at
  // level+1. The class's MST key is (level, class id).
  std::vector<std::int64_t> level(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> remaining(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) remaining[static_cast<std::size_t>(c)] = h.edges[static_cast<std::size_t>(c)].w;

  // Buckets of class ids by level, scanned in (level, id) order. Moves append
  // to the target bucket and leave a stale entry behind; scans sort dirty
  // buckets and compact stale entries out.
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(K + 2));
  std::vector<char> dirty(static_cast<std::size_t>(K + 2), 0);
  bucket[0].resize(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) bucket[0][static_cast<std::size_t>(c)] = c;
  std::int64_t min_level = 0;

  detail::UnionFind uf(n);
  std::vector<int> tree;
  tree.reserve(static_cast<std::size_t>(n - 1));
  std::unordered_map<std::uint64_t, std::vector<int>> dedup;  // hash -> tree indices

  auto tree_hash = [](const std::vector<int>& classes) {
    std::uint64_t hsh = 0xcbf29ce484222325ull;
    for (int c : classes) {
      hsh ^= static_cast<std::uint64_t>(c) + 0x9E3779B97F4A7C15ull;
      hsh *= 0x100000001b3ull;
    }
    return hsh;
  };

  while (true) {
    ++p.mst_calls;
    uf.reset();
    tree.clear();
    bool prefix_empty = true;
    for (std::int64_t lv = min_level; lv <= K + 1 && static_cast<int>(tree.size()) < n - 1; ++lv) {
      std::vector<int>& b = bucket[static_cast<std::size_t>(lv)];
      if (!b.empty()) {
        if (dirty[static_cast<std::size_t>(lv)]) {
          std::sort(b.begin(), b.end());
          dirty[static_cast<std::size_t>(lv)] = 0;
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
          int c = b[i];
          if (level[static_cast<std::size_t>(c)] != lv) continue;  // stale entry
          b[out++] = c;
          if (static_cast<int>(tree.size()) < n - 1 &&
              uf.unite(h.edges[static_cast<std::size_t>(c)].u, h.edges[static_cast<std::size_t>(c)].v))
            tree.push_back(c);
        }
        b.resize(out);
      }
      if (prefix_empty) {
        if (b.empty())
          min_level = lv + 1;
        else
          prefix_empty = false;
      }
    }
    require(static_cast<int>(tree.size()) == n - 1, errc::internal,
            "packing failed to find a spanning tree");

    // Increment the minimum-load copy of every tree class; stop before
    // counting this tree if any copy's load leaves [0, 1].
    bool violated = false;
    for (int c : tree) {
      std::size_t ci = static_cast<std::size_t>(c);
      if (level[ci] + 1 > K) violated = true;
      if (--remaining[ci] == 0) {
        ++level[ci];
        remaining[ci] = h.edges[ci].w;
        if (level[ci] <= K + 1) {
          bucket[static_cast<std::size_t>(level[ci])].push_back(c);
          dirty[static_cast<std::size_t>(level[ci])] = 1;
        }
      }
    }
    if (violated) break;

    ++p.weight_units;
    std::sort(tree.begin(), tree.end());
    std::uint64_t hsh = tree_hash(tree);
    bool found = false;
    for (int idx : dedup[hsh]) {
      if (p.trees[static_cast<std::size_t>(idx)].classes == tree) {
        ++p.trees[static_cast<std::size_t>(idx)].units;
        found = true;
        break;
      }
    }
    if (!found) {
      dedup[hsh].push_back(static_cast<int>(p.trees.size()));
      p.trees.push_back({tree, 1});
    }
  }
  return p;
}

}  // namespace mincut
