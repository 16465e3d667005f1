#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mincut/detail/union_find.hpp"
#include "mincut/error.hpp"

namespace mincut {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

struct IntEdge {
  int u = 0;
  int v = 0;
  std::int64_t w = 0;
};

// Undirected weighted simple graph. The constructor canonicalizes raw input:
// self-loops are dropped, parallel edges are merged by weight summation,
// endpoints are stored with u < v and edges sorted by (u, v). Connectivity is
// enforced, so every consumer can assume spanning trees exist.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const Edge> raw) : n_(n) {
    require(n >= 1, errc::malformed_input, "graph needs at least one vertex");
    edges_.reserve(raw.size());
    for (const Edge& e : raw) {
      require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n,
              errc::vertex_out_of_range, "edge endpoint out of range");
      require(std::isfinite(e.w), errc::malformed_input, "edge weight not finite");
      require(e.w >= 0.0, errc::negative_weight, "negative edge weight");
      if (e.u == e.v) continue;  // self-loops cross no cut
      edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (out > 0 && edges_[out - 1].u == edges_[i].u && edges_[out - 1].v == edges_[i].v) {
        edges_[out - 1].w += edges_[i].w;
      } else {
        edges_[out++] = edges_[i];
      }
    }
    edges_.resize(out);

    detail::UnionFind uf(n);
    for (const Edge& e : edges_) uf.unite(e.u, e.v);
    require(uf.components() == 1, errc::disconnected, "graph is not connected");

    for (const Edge& e : edges_) {
      total_weight_ += e.w;
      if (e.w != std::floor(e.w) || e.w >= 0x1.0p53) integral_ = false;
    }
  }

  Graph(int n, std::initializer_list<Edge> raw)
      : Graph(n, std::span<const Edge>(raw.begin(), raw.size())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  double total_weight() const { return total_weight_; }
  bool integral_weights() const { return integral_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  double total_weight_ = 0.0;
  bool integral_ = true;
};

// Integer-weighted view of a graph (all weights positive). `source[i]` is the
// edge id in the graph this one was derived from.
struct IntGraph {
  int n = 0;
  std::vector<IntEdge> edges;
  std::vector<int> source;

  // Number of edges when every weight-w edge is seen as w parallel edges.
  std::int64_t expanded_edge_count() const {
    std::int64_t total = 0;
    for (const IntEdge& e : edges) total += e.w;
    return total;
  }

  bool connected() const {
    if (n < 1) return false;
    detail::UnionFind uf(n);
    for (const IntEdge& e : edges) uf.unite(e.u, e.v);
    return uf.components() == 1;
  }
};

// A cut: its value, the 1-2 tree edges that induced it (empty for oracle
// algorithms), one side of the vertex partition (side[0] is always false),
// and the ids of the crossing edges.
struct CutResult {
  double value = 0.0;
  std::vector<int> tree_edges;
  std::vector<bool> side;
  std::vector<int> crossing;
};

inline double cut_weight(const Graph& g, const std::vector<bool>& side) {
  require(static_cast<int>(side.size()) == g.vertex_count(), errc::bad_argument,
          "side bitset size mismatch");
  int pop = static_cast<int>(std::count(side.begin(), side.end(), true));
  require(pop >= 1 && pop <= g.vertex_count() - 1, errc::bad_argument,
          "cut side must be a nonempty proper subset");
  double sum = 0.0;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) sum += e.w;
  return sum;
}

// Builds a full CutResult from a side bitset; normalizes so side[0] == false.
inline CutResult make_cut_result(const Graph& g, std::vector<bool> side) {
  if (!side.empty() && side[0]) side.flip();
  CutResult r;
  r.value = cut_weight(g, side);
  for (int i = 0; i < g.edge_count(); ++i)
    if (side[g.edge(i).u] != side[g.edge(i).v]) r.crossing.push_back(i);
  r.side = std::move(side);
  return r;
}

// Scales weights so the minimum nonzero weight maps to `multiplier` (default
// 100) and rounds to nearest. Weight-0 edges are dropped; the result must stay
// connected. A cut of scaled weight x keeps rounded weight in [.995x, 1.005x]
// for multiplier 100, since every kept weight is at least `multiplier`.
inline IntGraph normalize_and_round(const Graph& g, int multiplier = 100) {
  require(multiplier >= 1, errc::bad_argument, "multiplier must be positive");
  double w_min = 0.0, w_max = 0.0;
  for (const Edge& e : g.edges()) {
    if (e.w <= 0.0) continue;
    if (w_min == 0.0 || e.w < w_min) w_min = e.w;
    w_max = std::max(w_max, e.w);
  }
  require(w_min > 0.0, errc::all_zero_weights, "all edge weights are zero");
  require(w_max / w_min <= 0x1.0p40, errc::weight_ratio_too_large,
          "max/min weight ratio exceeds 2^40");

  IntGraph out;
  out.n = g.vertex_count();
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.w <= 0.0) continue;
    std::int64_t w = std::llround(static_cast<double>(multiplier) * (e.w / w_min));
    out.edges.push_back({e.u, e.v, w});
    out.source.push_back(i);
  }
  require(out.connected(), errc::disconnected,
          "dropping zero-weight edges disconnects the graph");
  return out;
}

// Upper bound for the minimum cut of an integer-weighted graph: the smallest
// sum of weights incident to a single vertex (a valid cut itself). With
// max_tree_bound, uses the n^2*w bound instead, where w is the minimum weight
// edge of a maximum spanning tree; meant for astronomically skewed weights.
inline std::int64_t min_cut_upper_bound(const IntGraph& g, bool max_tree_bound = false) {
  require(g.n >= 2, errc::bad_argument, "upper bound needs at least two vertices");
  if (!max_tree_bound) {
    std::vector<std::int64_t> incident(static_cast<std::size_t>(g.n), 0);
    for (const IntEdge& e : g.edges) {
      incident[static_cast<std::size_t>(e.u)] += e.w;
      incident[static_cast<std::size_t>(e.v)] += e.w;
    }
    return *std::min_element(incident.begin(), incident.end());
  }
  // Maximum spanning tree via Kruskal on descending weight.
  std::vector<int> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.edges[a].w != g.edges[b].w) return g.edges[a].w > g.edges[b].w;
    return a < b;
  });
  detail::UnionFind uf(g.n);
  std::int64_t tree_min = 0;
  for (int id : order) {
    if (uf.unite(g.edges[static_cast<std::size_t>(id)].u, g.edges[static_cast<std::size_t>(id)].v))
      tree_min = g.edges[static_cast<std::size_t>(id)].w;  // last accepted = smallest in MaxST
  }
  require(uf.components() == 1, errc::disconnected, "graph is not connected");
  __int128 bound = static_cast<__int128>(g.n) * g.n * tree_min;
  std::int64_t total = 0;
  for (const IntEdge& e : g.edges) total += e.w;  // total weight is also a valid bound
  if (bound > total) return total;
  return static_cast<std::int64_t>(bound);
}

namespace detail {

inline bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

inline bool parse_double(std::string_view tok, double& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size() && std::isfinite(out);
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace detail

// Graph file grammar: '#' lines are comments; the first non-comment line is
// "p <n> <m>"; then exactly m lines "<u> <v> <w>" with 1-indexed vertices and
// a decimal weight.
inline Graph parse_graph(std::string_view text) {
  long long n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  long long edges_seen = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (!have_header) {
      require(toks.size() == 3 && toks[0] == "p", errc::malformed_input,
              "expected header line 'p <n> <m>'");
      require(detail::parse_int(toks[1], n) && detail::parse_int(toks[2], m) &&
                  n >= 1 && m >= 0 && n <= (1 << 30) && m <= (1ll << 32),
              errc::malformed_input, "invalid vertex or edge count");
      have_header = true;
      continue;
    }

    require(edges_seen < m, errc::malformed_input, "more edge lines than declared");
    require(toks.size() == 3, errc::malformed_input, "edge line must be '<u> <v> <w>'");
    long long u = 0, v = 0;
    double w = 0.0;
    require(detail::parse_int(toks[0], u) && detail::parse_int(toks[1], v),
            errc::malformed_input, "invalid edge endpoints");
    require(detail::parse_double(toks[2], w), errc::malformed_input, "invalid edge weight");
    require(u >= 1 && u <= n && v >= 1 && v <= n, errc::vertex_out_of_range,
            "vertex id out of range");
    require(w >= 0.0, errc::negative_weight, "negative edge weight");
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), w});
    ++edges_seen;
  }
  require(have_header, errc::malformed_input, "missing header line");
  require(edges_seen == m, errc::malformed_input, "fewer edge lines than declared");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace mincut
