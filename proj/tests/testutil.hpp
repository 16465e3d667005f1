// Shared test helpers and independent oracles. Everything here executes
// definitions literally (parent walks, per-copy loads, exhaustive scans) and
// must stay independent of the library code paths it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "mincut/generate.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"
#include "mincut/spanning_tree.hpp"

namespace testutil {

using mincut::Edge;
using mincut::Graph;
using mincut::HldIndex;
using mincut::IntEdge;
using mincut::IntGraph;
using mincut::Rng;
using mincut::RootedTree;

// Edge set of the uv-path found by walking parent pointers.
inline std::vector<int> naive_path_edges(const RootedTree& t, int u, int v) {
  std::vector<int> out;
  while (u != v) {
    if (t.depth[static_cast<std::size_t>(u)] >= t.depth[static_cast<std::size_t>(v)]) {
      out.push_back(t.parent_edge[static_cast<std::size_t>(u)]);
      u = t.parent[static_cast<std::size_t>(u)];
    } else {
      out.push_back(t.parent_edge[static_cast<std::size_t>(v)]);
      v = t.parent[static_cast<std::size_t>(v)];
    }
  }
  return out;
}

// Literal model of the path aggregate structure: one value per position,
// mutated exactly as the operation definitions state. The HLD index is used
// only to name edges by position.
struct NaiveAggregator {
  const RootedTree* t;
  const HldIndex* h;
  std::vector<std::int64_t> value;  // index by position, slot 0 unused

  NaiveAggregator(const RootedTree& tree, const HldIndex& hld,
                  const std::vector<std::int64_t>& init)
      : t(&tree), h(&hld), value(static_cast<std::size_t>(tree.vertex_count()), 0) {
    for (int e = 0; e < tree.edge_count(); ++e)
      value[static_cast<std::size_t>(hld.position_of(e))] = init[static_cast<std::size_t>(e)];
  }

  void path_add(int u, int v, std::int64_t x) {
    for (int e : naive_path_edges(*t, u, v))
      value[static_cast<std::size_t>(h->position_of(e))] += x;
  }

  void nonpath_add(int u, int v, std::int64_t x) {
    std::set<int> on;
    for (int e : naive_path_edges(*t, u, v)) on.insert(h->position_of(e));
    for (int p = 1; p <= t->edge_count(); ++p)
      if (!on.count(p)) value[static_cast<std::size_t>(p)] += x;
  }

  void add_at(int pos, std::int64_t x) { value[static_cast<std::size_t>(pos)] += x; }

  std::pair<std::int64_t, int> query_min() const {
    std::int64_t best = value[1];
    int pos = 1;
    for (int p = 2; p <= t->edge_count(); ++p)
      if (value[static_cast<std::size_t>(p)] < best) {
        best = value[static_cast<std::size_t>(p)];
        pos = p;
      }
    return {best, pos};
  }
};

// Prim's algorithm, value only. Different algorithm family than the library's
// Kruskal, so MST weights can be cross-checked.
inline double prim_mst_weight(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
  }
  std::vector<double> dist(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  dist[0] = 0.0;
  double total = 0.0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] &&
          (pick == -1 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(pick)]))
        pick = v;
    used[static_cast<std::size_t>(pick)] = 1;
    total += dist[static_cast<std::size_t>(pick)];
    for (auto [to, w] : adj[static_cast<std::size_t>(pick)])
      if (!used[static_cast<std::size_t>(to)]) dist[static_cast<std::size_t>(to)] = std::min(dist[static_cast<std::size_t>(to)], w);
  }
  return total;
}

// Random attachment tree with shuffled labels.
inline RootedTree random_tree(int n, Rng& rng) {
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = label.size(); i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({label[static_cast<std::size_t>(v)],
                     label[rng.below(static_cast<std::uint64_t>(v))]});
  return mincut::make_rooted_tree(n, edges, {}, {}, label[0]);
}

inline RootedTree path_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return mincut::make_rooted_tree(n, edges, {}, {});
}

inline RootedTree star_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return mincut::make_rooted_tree(n, edges, {}, {});
}

inline RootedTree binary_tree(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
  return mincut::make_rooted_tree(n, edges, {}, {});
}

// Number of tree edges crossing a vertex partition.
inline int tree_crossing_count(const Graph& g, const RootedTree& t, const std::vector<bool>& side) {
  int count = 0;
  for (int e = 0; e < t.edge_count(); ++e) {
    const Edge& ge = g.edge(t.edge_graph[static_cast<std::size_t>(e)]);
    if (side[static_cast<std::size_t>(ge.u)] != side[static_cast<std::size_t>(ge.v)]) ++count;
  }
  return count;
}

// Literal replay of the greedy packing: every parallel copy is tracked
// individually and each MST is a fresh sort over (min copy load, class id).
struct NaivePackReplay {
  std::int64_t denom = 1;
  std::int64_t weight_units = 0;
  std::uint64_t mst_calls = 0;
  std::map<std::vector<int>, std::int64_t> trees;  // sorted class ids -> units

  explicit NaivePackReplay(const IntGraph& h, double eps3 = 0.2) {
    std::int64_t expanded = 0;
    for (const IntEdge& e : h.edges) expanded += e.w;
    denom = std::max<std::int64_t>(
        static_cast<std::int64_t>(std::floor(3.0 * std::log(static_cast<double>(expanded)) / (eps3 * eps3))), 1);
    std::vector<std::vector<std::int64_t>> copies(h.edges.size());
    for (std::size_t c = 0; c < h.edges.size(); ++c)
      copies[c].assign(static_cast<std::size_t>(h.edges[c].w), 0);

    while (true) {
      ++mst_calls;
      std::vector<int> order(h.edges.size());
      for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<int>(c);
      auto min_load = [&](int c) {
        return *std::min_element(copies[static_cast<std::size_t>(c)].begin(),
                                 copies[static_cast<std::size_t>(c)].end());
      };
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::int64_t la = min_load(a), lb = min_load(b);
        return la != lb ? la < lb : a < b;
      });
      mincut::detail::UnionFind uf(h.n);
      std::vector<int> tree;
      for (int c : order)
        if (uf.unite(h.edges[static_cast<std::size_t>(c)].u, h.edges[static_cast<std::size_t>(c)].v))
          tree.push_back(c);
      bool violated = false;
      for (int c : tree) {
        auto& cs = copies[static_cast<std::size_t>(c)];
        auto it = std::min_element(cs.begin(), cs.end());
        *it += 1;
        if (*it > denom) violated = true;
      }
      if (violated) break;
      ++weight_units;
      std::sort(tree.begin(), tree.end());
      trees[tree] += 1;
    }
  }
};

}  // namespace testutil
