#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mincut/detail/union_find.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/respect_cuts.hpp"
#include "mincut/rng.hpp"
#include "mincut/spanning_tree.hpp"

namespace mincut {

// Deterministic exact global minimum cut via repeated maximum adjacency
// search (O(n^3) with plain arrays). Each phase yields an arbitrary minimum
// s-t cut; s and t are then merged.
inline CutResult stoer_wagner(const Graph& g) {
  int n = g.vertex_count();
  require(n >= 2, errc::bad_argument, "minimum cut needs at least two vertices");

  std::vector<std::vector<double>> w(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (const Edge& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.w;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += e.w;
  }
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(v)] = {v};
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) active[static_cast<std::size_t>(v)] = v;

  double best_value = 0.0;
  std::vector<bool> best_side;
  bool have_best = false;

  std::vector<double> key(static_cast<std::size_t>(n));
  std::vector<char> added(static_cast<std::size_t>(n));
  while (active.size() > 1) {
    for (int v : active) {
      key[static_cast<std::size_t>(v)] = 0.0;
      added[static_cast<std::size_t>(v)] = 0;
    }
    int s = -1, t = -1;
    double cut_of_phase = 0.0;
    for (std::size_t step = 0; step < active.size(); ++step) {
      int pick = -1;
      for (int v : active)
        if (!added[static_cast<std::size_t>(v)] &&
            (pick == -1 || key[static_cast<std::size_t>(v)] > key[static_cast<std::size_t>(pick)]))
          pick = v;
      require(pick >= 0, errc::internal, "adjacency search ran out of vertices");
      added[static_cast<std::size_t>(pick)] = 1;
      s = t;
      t = pick;
      cut_of_phase = key[static_cast<std::size_t>(pick)];
      for (int v : active)
        if (!added[static_cast<std::size_t>(v)])
          key[static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(pick)][static_cast<std::size_t>(v)];
    }

    std::vector<bool> side(static_cast<std::size_t>(n), false);
    for (int v : members[static_cast<std::size_t>(t)]) side[static_cast<std::size_t>(v)] = true;
    if (!have_best || cut_of_phase < best_value) {
      have_best = true;
      best_value = cut_of_phase;
      best_side = side;
    }

    // Merge t into s.
    for (int v : active) {
      if (v == s || v == t) continue;
      w[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] +=
          w[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
      w[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] =
          w[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)];
    }
    members[static_cast<std::size_t>(s)].insert(members[static_cast<std::size_t>(s)].end(),
                                                members[static_cast<std::size_t>(t)].begin(),
                                                members[static_cast<std::size_t>(t)].end());
    active.erase(std::find(active.begin(), active.end(), t));
  }
  return make_cut_result(g, best_side);
}

// Karger's randomized contraction, repeated `trials` times; Monte Carlo.
// Edges are contracted with probability proportional to weight.
inline CutResult contraction_min_cut(const Graph& g, int trials, Rng rng) {
  int n = g.vertex_count();
  require(n >= 2, errc::bad_argument, "minimum cut needs at least two vertices");
  require(trials >= 1, errc::bad_argument, "need at least one trial");

  CutResult best;
  bool have_best = false;
  struct Alive {
    int u, v;
    double w;
  };
  for (int trial = 0; trial < trials; ++trial) {
    Rng trial_rng = rng.stream(static_cast<std::uint64_t>(trial));
    detail::UnionFind uf(n);
    std::vector<Alive> alive;
    alive.reserve(g.edges().size());
    double total = 0.0;
    for (const Edge& e : g.edges()) {
      if (e.w <= 0.0) continue;
      alive.push_back({e.u, e.v, e.w});
      total += e.w;
    }
    int components = n;
    while (components > 2 && !alive.empty()) {
      double r = trial_rng.uniform() * total;
      std::size_t pick = 0;
      double acc = 0.0;
      for (std::size_t i = 0; i < alive.size(); ++i) {
        acc += alive[i].w;
        if (r < acc) {
          pick = i;
          break;
        }
      }
      uf.unite(alive[pick].u, alive[pick].v);
      --components;
      std::size_t out = 0;
      total = 0.0;
      for (std::size_t i = 0; i < alive.size(); ++i) {
        if (uf.find(alive[i].u) == uf.find(alive[i].v)) continue;
        alive[out++] = alive[i];
        total += alive[i].w;
      }
      alive.resize(out);
    }
    // Zero-weight edges may leave more than two components contractable only
    // through weightless edges; merge the rest arbitrarily (cut value 0).
    if (components > 2) {
      for (const Edge& e : g.edges())
        if (uf.find(e.u) != uf.find(e.v) && components > 2) {
          uf.unite(e.u, e.v);
          --components;
        }
    }
    std::vector<bool> side(static_cast<std::size_t>(n));
    int anchor = uf.find(0);
    for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = uf.find(v) != anchor;
    CutResult cand = make_cut_result(g, std::move(side));
    if (!have_best || cand.value < best.value) {
      have_best = true;
      best = std::move(cand);
    }
  }
  return best;
}

// Exact minimum over all 2^(n-1)-1 bipartitions. Ground-truth oracle for
// small instances only.
inline CutResult brute_force_min_cut(const Graph& g) {
  int n = g.vertex_count();
  require(n >= 2, errc::bad_argument, "minimum cut needs at least two vertices");
  require(n <= 20, errc::bad_argument, "brute force limited to n <= 20");

  double best = 0.0;
  std::uint32_t best_mask = 0;
  bool have = false;
  std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    double value = 0.0;
    for (const Edge& e : g.edges()) {
      bool su = e.u < n - 1 && ((mask >> e.u) & 1u);
      bool sv = e.v < n - 1 && ((mask >> e.v) & 1u);
      if (su != sv) value += e.w;
    }
    if (!have || value < best) {
      have = true;
      best = value;
      best_mask = mask;
    }
  }
  std::vector<bool> side(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n - 1; ++v) side[static_cast<std::size_t>(v)] = (best_mask >> v) & 1u;
  return make_cut_result(g, std::move(side));
}

// Exact minimum over every single tree edge and every unordered pair,
// evaluated through recover_cut. Oracle for the 2-respect scan.
inline CutResult brute_force_two_respect(const Graph& g, const RootedTree& t) {
  detail::check_tree_spans(g, t);
  require(t.vertex_count() <= 256, errc::bad_argument, "2-respect brute force limited to n <= 256");
  int k = t.edge_count();
  CutResult best;
  bool have = false;
  auto consider = [&](CutResult cand) {
    if (!have || cand.value < best.value) {
      have = true;
      best = std::move(cand);
    }
  };
  for (int i = 0; i < k; ++i) consider(recover_cut(g, t, std::array<int, 1>{i}));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) consider(recover_cut(g, t, std::array<int, 2>{i, j}));
  return best;
}

}  // namespace mincut
