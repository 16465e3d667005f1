#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mincut/detail/union_find.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

// Rooted spanning tree. Tree edges are identified by the deeper endpoint and
// numbered 0..n-2 in DFS discovery order. `edge_graph[e]` ties a tree edge
// back to an edge id of the graph it was built from (-1 if detached).
struct RootedTree {
  int root = 0;
  std::vector<int> parent;       // -1 at root
  std::vector<int> parent_edge;  // -1 at root
  std::vector<int> depth;
  std::vector<int> subtree_size;
  std::vector<int> tin, tout;    // preorder interval of each vertex
  std::vector<int> edge_child;   // tree edge -> deeper endpoint
  std::vector<int> edge_graph;   // tree edge -> graph edge id
  std::vector<double> edge_weight;

  int vertex_count() const { return static_cast<int>(parent.size()); }
  int edge_count() const { return static_cast<int>(edge_child.size()); }

  // True if v lies in the subtree hanging below tree edge e.
  bool below(int e, int v) const {
    int c = edge_child[static_cast<std::size_t>(e)];
    return tin[static_cast<std::size_t>(c)] <= tin[static_cast<std::size_t>(v)] &&
           tin[static_cast<std::size_t>(v)] < tout[static_cast<std::size_t>(c)];
  }
};

inline RootedTree make_rooted_tree(int n, std::span<const std::pair<int, int>> edges,
                                   std::span<const int> graph_ids,
                                   std::span<const double> weights, int root = 0) {
  require(n >= 1, errc::bad_argument, "tree needs at least one vertex");
  require(static_cast<int>(edges.size()) == n - 1, errc::bad_argument,
          "a spanning tree has exactly n-1 edges");
  require(root >= 0 && root < n, errc::bad_argument, "root out of range");

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    require(u >= 0 && u < n && v >= 0 && v < n && u != v, errc::bad_argument,
            "invalid tree edge");
    adj[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(i)});
    adj[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(i)});
  }

  RootedTree t;
  t.root = root;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  t.parent_edge.assign(static_cast<std::size_t>(n), -1);
  t.depth.assign(static_cast<std::size_t>(n), 0);
  t.subtree_size.assign(static_cast<std::size_t>(n), 1);
  t.tin.assign(static_cast<std::size_t>(n), -1);
  t.tout.assign(static_cast<std::size_t>(n), -1);
  t.edge_child.reserve(edges.size());
  t.edge_graph.reserve(edges.size());
  t.edge_weight.reserve(edges.size());

  // Iterative DFS; the second visit of a vertex finalizes tout/subtree_size.
  std::vector<std::pair<int, std::size_t>> stack;
  stack.push_back({root, 0});
  int timer = 0;
  t.tin[static_cast<std::size_t>(root)] = timer++;
  while (!stack.empty()) {
    auto& [v, it] = stack.back();
    if (it < adj[static_cast<std::size_t>(v)].size()) {
      auto [to, input_id] = adj[static_cast<std::size_t>(v)][it++];
      if (to == t.parent[static_cast<std::size_t>(v)]) continue;
      require(t.tin[static_cast<std::size_t>(to)] == -1, errc::bad_argument,
              "edges do not form a tree");
      t.parent[static_cast<std::size_t>(to)] = v;
      t.depth[static_cast<std::size_t>(to)] = t.depth[static_cast<std::size_t>(v)] + 1;
      t.tin[static_cast<std::size_t>(to)] = timer++;
      int e = static_cast<int>(t.edge_child.size());
      t.parent_edge[static_cast<std::size_t>(to)] = e;
      t.edge_child.push_back(to);
      t.edge_graph.push_back(graph_ids.empty() ? input_id : graph_ids[static_cast<std::size_t>(input_id)]);
      t.edge_weight.push_back(weights.empty() ? 0.0 : weights[static_cast<std::size_t>(input_id)]);
      stack.push_back({to, 0});
    } else {
      t.tout[static_cast<std::size_t>(v)] = timer;
      if (int p = t.parent[static_cast<std::size_t>(v)]; p >= 0)
        t.subtree_size[static_cast<std::size_t>(p)] += t.subtree_size[static_cast<std::size_t>(v)];
      stack.pop_back();
    }
  }
  require(timer == n, errc::bad_argument, "tree edges do not span all vertices");
  return t;
}

// Builds the rooted tree for a set of edge ids of g.
inline RootedTree tree_from_graph(const Graph& g, std::span<const int> edge_ids, int root = 0) {
  std::vector<std::pair<int, int>> ends;
  std::vector<int> ids;
  std::vector<double> ws;
  ends.reserve(edge_ids.size());
  for (int id : edge_ids) {
    require(id >= 0 && id < g.edge_count(), errc::bad_argument, "edge id out of range");
    ends.push_back({g.edge(id).u, g.edge(id).v});
    ids.push_back(id);
    ws.push_back(g.edge(id).w);
  }
  return make_rooted_tree(g.vertex_count(), ends, ids, ws, root);
}

// Kruskal with ties broken by smallest edge id, so results are deterministic.
// The returned tree stores each edge's load as its weight and the input index
// as its graph id.
inline RootedTree minimum_spanning_tree(int n, std::span<const Edge> edges) {
  std::vector<int> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (edges[static_cast<std::size_t>(a)].w != edges[static_cast<std::size_t>(b)].w)
      return edges[static_cast<std::size_t>(a)].w < edges[static_cast<std::size_t>(b)].w;
    return a < b;
  });
  detail::UnionFind uf(n);
  std::vector<std::pair<int, int>> ends;
  std::vector<int> ids;
  std::vector<double> ws;
  for (int id : order) {
    const Edge& e = edges[static_cast<std::size_t>(id)];
    if (uf.unite(e.u, e.v)) {
      ends.push_back({e.u, e.v});
      ids.push_back(id);
      ws.push_back(e.w);
      if (static_cast<int>(ends.size()) == n - 1) break;
    }
  }
  require(static_cast<int>(ends.size()) == n - 1, errc::disconnected,
          "edges do not connect all vertices");
  return make_rooted_tree(n, ends, ids, ws);
}

inline RootedTree random_spanning_tree(const Graph& g, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);
  detail::UnionFind uf(g.vertex_count());
  std::vector<int> chosen;
  for (int id : order)
    if (uf.unite(g.edge(id).u, g.edge(id).v)) chosen.push_back(id);
  return tree_from_graph(g, chosen);
}

struct PosInterval {
  int lo = 0;
  int hi = 0;  // inclusive
};

// Heavy-light decomposition of a rooted tree. Tree edges get positions
// 1..n-1 (the preorder time of the deeper endpoint, heavy child visited
// first), which lays every heavy path out contiguously. The edge set of any
// uv-path is then the union of at most 2*ceil(log2 n) position intervals.
class HldIndex {
 public:
  HldIndex() = default;

  explicit HldIndex(const RootedTree& t) {
    int n = t.vertex_count();
    require(n >= 2, errc::bad_argument, "decomposition needs at least one edge");
    parent_ = t.parent;
    depth_ = t.depth;
    hpos_.assign(static_cast<std::size_t>(n), 0);
    chain_of_.assign(static_cast<std::size_t>(n), -1);
    pos_edge_.assign(static_cast<std::size_t>(n - 1), 0);
    edge_at_.assign(static_cast<std::size_t>(n), -1);

    // Children in vertex-id order; the heavy child (max subtree, smallest id
    // on ties) is moved to the front so the DFS lays chains out contiguously.
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (t.parent[static_cast<std::size_t>(v)] >= 0)
        children[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(v)])].push_back(v);
    for (int v = 0; v < n; ++v) {
      auto& ch = children[static_cast<std::size_t>(v)];
      if (ch.empty()) continue;
      auto heavy = std::max_element(ch.begin(), ch.end(), [&](int a, int b) {
        return t.subtree_size[static_cast<std::size_t>(a)] < t.subtree_size[static_cast<std::size_t>(b)];
      });
      std::swap(*ch.begin(), *heavy);
    }

    std::vector<std::pair<int, std::size_t>> stack;
    stack.push_back({t.root, 0});
    int timer = 0;
    register_vertex(t, t.root, timer, /*new_chain=*/true);
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == children[static_cast<std::size_t>(v)].size()) {
        stack.pop_back();
        continue;
      }
      int to = children[static_cast<std::size_t>(v)][it];
      bool heavy = it == 0;
      ++it;
      register_vertex(t, to, timer, /*new_chain=*/!heavy);
      stack.push_back({to, 0});
    }
    for (std::size_t c = 0; c < chain_head_.size(); ++c)
      span_.push_back({std::max(hpos_[static_cast<std::size_t>(chain_head_[c])], 1),
                       chain_last_pos_[c]});
  }

  int edge_count() const { return static_cast<int>(pos_edge_.size()); }
  int position_of(int tree_edge) const { return pos_edge_[static_cast<std::size_t>(tree_edge)]; }
  int edge_at(int pos) const { return edge_at_[static_cast<std::size_t>(pos)]; }
  int chain_count() const { return static_cast<int>(chain_head_.size()); }
  int chain_of_vertex(int v) const { return chain_of_[static_cast<std::size_t>(v)]; }
  int chain_head(int chain) const { return chain_head_[static_cast<std::size_t>(chain)]; }
  // Positions occupied by a chain's edges (its top light edge included).
  PosInterval chain_span(int chain) const { return span_[static_cast<std::size_t>(chain)]; }

  // Upper bound on the interval count of any path query.
  int max_intervals() const {
    int n = static_cast<int>(hpos_.size());
    return 2 * static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  }

  void path_intervals_into(int u, int v, std::vector<PosInterval>& out) const {
    out.clear();
    if (u == v) return;
    while (chain_of_[static_cast<std::size_t>(u)] != chain_of_[static_cast<std::size_t>(v)]) {
      int hu = chain_head_[static_cast<std::size_t>(chain_of_[static_cast<std::size_t>(u)])];
      int hv = chain_head_[static_cast<std::size_t>(chain_of_[static_cast<std::size_t>(v)])];
      if (depth_[static_cast<std::size_t>(hu)] < depth_[static_cast<std::size_t>(hv)]) {
        std::swap(u, v);
        std::swap(hu, hv);
      }
      out.push_back({hpos_[static_cast<std::size_t>(hu)], hpos_[static_cast<std::size_t>(u)]});
      u = parent_[static_cast<std::size_t>(hu)];
    }
    if (u != v) {
      int pu = hpos_[static_cast<std::size_t>(u)], pv = hpos_[static_cast<std::size_t>(v)];
      out.push_back({std::min(pu, pv) + 1, std::max(pu, pv)});
    }
  }

 private:
  void register_vertex(const RootedTree& t, int v, int& timer, bool new_chain) {
    int pos = timer++;
    hpos_[static_cast<std::size_t>(v)] = pos;
    if (new_chain) {
      chain_of_[static_cast<std::size_t>(v)] = static_cast<int>(chain_head_.size());
      chain_head_.push_back(v);
      chain_last_pos_.push_back(pos);
    } else {
      chain_of_[static_cast<std::size_t>(v)] =
          chain_of_[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(v)])];
      chain_last_pos_[static_cast<std::size_t>(chain_of_[static_cast<std::size_t>(v)])] = pos;
    }
    if (int e = t.parent_edge[static_cast<std::size_t>(v)]; e >= 0) {
      pos_edge_[static_cast<std::size_t>(e)] = pos;
      edge_at_[static_cast<std::size_t>(pos)] = e;
    }
  }

  std::vector<int> parent_, depth_, hpos_, chain_of_, pos_edge_, edge_at_;
  std::vector<int> chain_head_, chain_last_pos_;
  std::vector<PosInterval> span_;
};

inline HldIndex decompose(const RootedTree& t) { return HldIndex(t); }

inline std::vector<PosInterval> path_intervals(const HldIndex& h, int u, int v) {
  std::vector<PosInterval> out;
  h.path_intervals_into(u, v, out);
  return out;
}

}  // namespace mincut
