#pragma once

#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mincut/detail/format.hpp"
#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

namespace detail {

inline double draw_weight(double lo, double hi, Rng& rng) {
  if (lo == hi) return lo;
  if (lo == std::floor(lo) && hi == std::floor(hi))
    return static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(lo),
                                               static_cast<std::int64_t>(hi)));
  return lo + rng.uniform() * (hi - lo);
}

}  // namespace detail

// Connected Erdos-Renyi-style graph: a random attachment backbone guarantees
// connectivity, then each remaining pair appears with probability p.
// Coinciding edges merge by weight summation, like any parsed input.
inline Graph gen_random_connected(int n, double p, double wlo, double whi, Rng rng) {
  require(n >= 2, errc::bad_argument, "need at least two vertices");
  require(p >= 0.0 && p <= 1.0, errc::bad_argument, "probability out of range");
  require(wlo > 0.0 && whi >= wlo, errc::bad_argument, "invalid weight range");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    int a = order[static_cast<std::size_t>(i)];
    int b = order[rng.below(static_cast<std::uint64_t>(i))];
    edges.push_back({a, b, detail::draw_weight(wlo, whi, rng)});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.push_back({u, v, detail::draw_weight(wlo, whi, rng)});
  return Graph(n, edges);
}

// Connected random graph with exactly m distinct edges.
inline Graph gen_random_m(int n, int m, double wlo, double whi, Rng rng) {
  require(n >= 2, errc::bad_argument, "need at least two vertices");
  std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  require(m >= n - 1 && m <= max_edges, errc::bad_argument, "edge count out of range");

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) return false;
    edges.push_back({a, b, detail::draw_weight(wlo, whi, rng)});
    return true;
  };
  for (int i = 1; i < n; ++i) add(order[static_cast<std::size_t>(i)], order[rng.below(static_cast<std::uint64_t>(i))]);
  while (static_cast<int>(edges.size()) < m) {
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (a != b) add(a, b);
  }
  return Graph(n, edges);
}

// Two k-cliques joined by `bridges` unit edges between distinct vertex pairs;
// the planted minimum cut separates the cliques with value `bridges`.
inline Graph gen_two_cliques(int k, int bridges) {
  require(k >= 3, errc::bad_argument, "clique size must be at least 3");
  require(bridges >= 1 && bridges <= k, errc::bad_argument, "bridge count out of range");
  require(bridges < k - 1, errc::bad_argument, "planted cut must beat single-vertex cuts");
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    int base = side * k;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) edges.push_back({base + u, base + v, 1.0});
  }
  for (int i = 0; i < bridges; ++i) edges.push_back({i, k + i, 1.0});
  return Graph(2 * k, edges);
}

inline Graph gen_cycle(int n, double wlo, double whi, Rng rng) {
  require(n >= 3, errc::bad_argument, "cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, detail::draw_weight(wlo, whi, rng)});
  return Graph(n, edges);
}

// side x side grid with 4-neighbor edges.
inline Graph gen_grid(int side, double wlo, double whi, Rng rng) {
  require(side >= 2, errc::bad_argument, "grid side must be at least 2");
  auto id = [side](int r, int c) { return r * side + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) edges.push_back({id(r, c), id(r, c + 1), detail::draw_weight(wlo, whi, rng)});
      if (r + 1 < side) edges.push_back({id(r, c), id(r + 1, c), detail::draw_weight(wlo, whi, rng)});
    }
  return Graph(side * side, edges);
}

// Serializes in the parse_graph grammar; comment lines go first.
inline std::string render_graph_file(const Graph& g, const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const std::string& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += ' ';
    out += detail::format_number(e.w);
    out += '\n';
  }
  return out;
}

}  // namespace mincut
