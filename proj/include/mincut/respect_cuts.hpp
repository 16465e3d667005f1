#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/path_aggregate.hpp"
#include "mincut/spanning_tree.hpp"
#include "mincut/tree_sampler.hpp"

namespace mincut {

// For every non-tree edge, the sweep positions where the current tree edge
// e_i moves on or off that edge's tree path. Eager per-position event lists;
// O(m log n) entries total.
struct TransitionSchedule {
  struct Event {
    int graph_edge;
    bool enter;
  };
  std::vector<std::vector<Event>> at;  // indexed by position 1..n-1
  std::uint64_t total_events = 0;
};

namespace detail {

inline void check_tree_spans(const Graph& g, const RootedTree& t) {
  require(t.vertex_count() == g.vertex_count(), errc::bad_argument,
          "tree does not match graph");
  require(t.edge_count() == g.vertex_count() - 1, errc::bad_argument,
          "tree does not span graph");
  for (int e = 0; e < t.edge_count(); ++e) {
    int id = t.edge_graph[static_cast<std::size_t>(e)];
    require(id >= 0 && id < g.edge_count(), errc::bad_argument,
            "tree edge has no matching graph edge");
    int c = t.edge_child[static_cast<std::size_t>(e)];
    int p = t.parent[static_cast<std::size_t>(c)];
    const Edge& ge = g.edge(id);
    require((ge.u == c && ge.v == p) || (ge.u == p && ge.v == c), errc::bad_argument,
            "tree edge endpoints do not match graph edge");
  }
}

}  // namespace detail

inline TransitionSchedule build_schedule(const Graph& g, const RootedTree& t, const HldIndex& h) {
  detail::check_tree_spans(g, t);
  int n = g.vertex_count();
  TransitionSchedule s;
  s.at.resize(static_cast<std::size_t>(n));
  std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e = 0; e < t.edge_count(); ++e)
    in_tree[static_cast<std::size_t>(t.edge_graph[static_cast<std::size_t>(e)])] = 1;

  std::vector<PosInterval> ivs;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (in_tree[static_cast<std::size_t>(id)]) continue;
    h.path_intervals_into(g.edge(id).u, g.edge(id).v, ivs);
    for (const PosInterval& iv : ivs) {
      s.at[static_cast<std::size_t>(iv.lo)].push_back({id, true});
      ++s.total_events;
      if (iv.hi + 1 <= n - 1) {
        s.at[static_cast<std::size_t>(iv.hi + 1)].push_back({id, false});
        ++s.total_events;
      }
    }
  }
  return s;
}

// Vertex partition induced by cutting one or two tree edges: the subtree
// below a single edge, or the symmetric difference of the two subtrees.
inline CutResult recover_cut(const Graph& g, const RootedTree& t, std::span<const int> cut_edges) {
  require(cut_edges.size() == 1 || cut_edges.size() == 2, errc::bad_argument,
          "a 2-respecting cut uses one or two tree edges");
  require(cut_edges.size() == 1 || cut_edges[0] != cut_edges[1], errc::bad_argument,
          "cut edges must be distinct");
  for (int e : cut_edges)
    require(e >= 0 && e < t.edge_count(), errc::bad_argument, "tree edge id out of range");

  int n = t.vertex_count();
  std::vector<bool> side(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    bool s = t.below(cut_edges[0], v);
    if (cut_edges.size() == 2) s = s != t.below(cut_edges[1], v);
    side[static_cast<std::size_t>(v)] = s;
  }
  CutResult r = make_cut_result(g, std::move(side));
  r.tree_edges.assign(cut_edges.begin(), cut_edges.end());
  std::sort(r.tree_edges.begin(), r.tree_edges.end());
  return r;
}

// Sweep engine for the 2-respect scan. The aggregator starts in the
// "current edge off every path" state: each non-tree edge's weight applied to
// the edges on its tree path. advance(i) restores the invariant for position
// i; after that, the logical value at position j != i is the weight of the
// cut {e_i, e_j} minus the weight of e_i.
template <typename T>
class TwoRespectSweep {
 public:
  TwoRespectSweep(const Graph& g, const RootedTree& t, const HldIndex& h,
                  const TransitionSchedule& sched)
      : g_(g), t_(t), h_(h), sched_(sched), agg_(make_aggregator(t, h)) {
    weights_.reserve(static_cast<std::size_t>(g.edge_count()));
    T total = T(0);
    for (const Edge& e : g.edges()) {
      weights_.push_back(to_value(e.w));
      total += weights_.back();
    }
    sentinel_ = total + T(1);
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e = 0; e < t.edge_count(); ++e)
      in_tree[static_cast<std::size_t>(t.edge_graph[static_cast<std::size_t>(e)])] = 1;
    for (int id = 0; id < g_.edge_count(); ++id) {
      if (in_tree[static_cast<std::size_t>(id)]) continue;
      const Edge& e = g_.edge(id);
      if (e.w != 0.0) agg_.path_add(e.u, e.v, weights_[static_cast<std::size_t>(id)]);
    }
  }

  static T to_value(double w) {
    if constexpr (std::is_integral_v<T>)
      return static_cast<T>(std::llround(w));
    else
      return static_cast<T>(w);
  }

  // Apply the transitions scheduled at position i.
  void advance(int i) {
    for (const TransitionSchedule::Event& ev : sched_.at[static_cast<std::size_t>(i)]) {
      const Edge& e = g_.edge(ev.graph_edge);
      T w = weights_[static_cast<std::size_t>(ev.graph_edge)];
      if (w == T(0)) continue;
      if (ev.enter) {
        agg_.path_add(e.u, e.v, -w);
        agg_.nonpath_add(e.u, e.v, w);
      } else {
        agg_.nonpath_add(e.u, e.v, -w);
        agg_.path_add(e.u, e.v, w);
      }
    }
  }

  // Exclude e_i with a finite sentinel, query, restore. Returns the best
  // partner position and the full candidate cut value.
  typename PathAggregator<T>::MinEntry probe(int i) {
    agg_.add_at(i, sentinel_);
    auto m = agg_.query_min();
    agg_.add_at(i, -sentinel_);
    m.value += tree_weight(i);
    return m;
  }

  T tree_weight(int pos) const {
    return to_value(t_.edge_weight[static_cast<std::size_t>(h_.edge_at(pos))]);
  }

  PathAggregator<T>& aggregator() { return agg_; }

 private:
  static PathAggregator<T> make_aggregator(const RootedTree& t, const HldIndex& h) {
    std::vector<T> init(static_cast<std::size_t>(t.edge_count()));
    for (int e = 0; e < t.edge_count(); ++e)
      init[static_cast<std::size_t>(e)] = to_value(t.edge_weight[static_cast<std::size_t>(e)]);
    return PathAggregator<T>(h, init);
  }

  const Graph& g_;
  const RootedTree& t_;
  const HldIndex& h_;
  const TransitionSchedule& sched_;
  PathAggregator<T> agg_;
  std::vector<T> weights_;
  T sentinel_ = T(0);
};

struct SweepStats {
  std::uint64_t agg_ops = 0;
  std::uint64_t events = 0;
};

namespace detail {

template <typename T>
CutResult min_2respect_impl(const Graph& g, const RootedTree& t, const HldIndex& h,
                            const TransitionSchedule& sched, SweepStats* stats) {
  TwoRespectSweep<T> sweep(g, t, h, sched);
  int positions = h.edge_count();

  // The fresh state doubles as the step-5 pass: one query yields the best
  // cut that 1-respects the tree.
  auto single = sweep.aggregator().query_min();

  bool have_pair = false;
  T best_pair_value = T(0);
  int best_i = 0, best_j = 0;
  for (int i = 1; i <= positions; ++i) {
    sweep.advance(i);
    auto cand = sweep.probe(i);
    if (cand.pos == i) continue;  // no partner position exists (n == 2)
    if (!have_pair || cand.value < best_pair_value) {
      have_pair = true;
      best_pair_value = cand.value;
      best_i = i;
      best_j = cand.pos;
    }
  }

  CutResult result;
  if (have_pair && best_pair_value < single.value) {
    result = recover_cut(g, t, std::array<int, 2>{h.edge_at(best_i), h.edge_at(best_j)});
  } else {
    result = recover_cut(g, t, std::array<int, 1>{h.edge_at(single.pos)});
  }
  if (stats) {
    stats->agg_ops = sweep.aggregator().op_count();
    stats->events = sched.total_events;
  }
  return result;
}

}  // namespace detail

// Minimum cut that 2-respects t, exact for the given tree (Algorithm 4 of the
// sweep family). Integer weights run on 64-bit integers; otherwise doubles,
// with the usual caveat that near-ties may resolve within ~1e-9 relative.
inline CutResult min_2respect(const Graph& g, const RootedTree& t, SweepStats* stats = nullptr) {
  HldIndex h = decompose(t);
  TransitionSchedule sched = build_schedule(g, t, h);
  if (g.integral_weights())
    return detail::min_2respect_impl<std::int64_t>(g, t, h, sched, stats);
  return detail::min_2respect_impl<double>(g, t, h, sched, stats);
}

namespace detail {

template <typename T>
CutResult min_1respect_impl(const Graph& g, const RootedTree& t, const HldIndex& h,
                            const TransitionSchedule& sched) {
  T running = T(0);
  bool have = false;
  T best = T(0);
  int best_pos = 1;
  for (int i = 1; i <= h.edge_count(); ++i) {
    for (const TransitionSchedule::Event& ev : sched.at[static_cast<std::size_t>(i)]) {
      T w = TwoRespectSweep<T>::to_value(g.edge(ev.graph_edge).w);
      running += ev.enter ? w : -w;
    }
    T cand = running +
             TwoRespectSweep<T>::to_value(t.edge_weight[static_cast<std::size_t>(h.edge_at(i))]);
    if (!have || cand < best) {
      have = true;
      best = cand;
      best_pos = i;
    }
  }
  return recover_cut(g, t, std::array<int, 1>{h.edge_at(best_pos)});
}

}  // namespace detail

// Minimum cut that 1-respects t: scalar sweep over the HLD order keeping the
// total weight of non-tree edges whose path contains the current edge.
inline CutResult min_1respect(const Graph& g, const RootedTree& t) {
  HldIndex h = decompose(t);
  TransitionSchedule sched = build_schedule(g, t, h);
  if (g.integral_weights()) return detail::min_1respect_impl<std::int64_t>(g, t, h, sched);
  return detail::min_1respect_impl<double>(g, t, h, sched);
}

struct MinCutStats {
  std::uint64_t agg_ops = 0;
  SamplerTrace trace;
};

// Randomized global minimum cut: sample Theta(log n) trees from a packing of
// a downsampled graph, scan each with min_2respect, keep the best. With the
// default parameters the answer is the true minimum cut with probability at
// least 1 - 1/n^d. Cut values are evaluated on the original weights of g.
inline CutResult min_cut(const Graph& g, const SamplerConfig& cfg, int threads = 1,
                         MinCutStats* stats = nullptr) {
  require(g.vertex_count() >= 2, errc::bad_argument, "minimum cut needs at least two vertices");
  SamplerTrace local_trace;
  SamplerTrace* trace = stats ? &stats->trace : &local_trace;
  std::vector<RootedTree> trees = respecting_trees(g, cfg, Rng(cfg.seed()), trace);

  std::vector<CutResult> results(trees.size());
  std::vector<SweepStats> sweep_stats(trees.size());
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      results[i] = min_2respect(g, trees[i], &sweep_stats[i]);
  };
  if (threads <= 1 || trees.size() < 2) {
    run_range(0, trees.size());
  } else {
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), trees.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (trees.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(run_range, w * chunk, std::min(trees.size(), (w + 1) * chunk));
    for (std::thread& th : pool) th.join();
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[best].value ||
        (results[i].value == results[best].value && results[i].side < results[best].side))
      best = i;
  }
  if (stats) {
    stats->agg_ops = 0;
    for (const SweepStats& s : sweep_stats) stats->agg_ops += s.agg_ops;
  }
  return results[best];
}

}  // namespace mincut
