#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincut/error.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"
#include "mincut/spanning_tree.hpp"
#include "mincut/tree_packing.hpp"

namespace mincut {

struct SamplerOptions {
  int d = 2;                   // success exponent: failure probability <= 1/n^d
  double eps1 = 0.01;          // weight rounding parameter (scale = 1/eps1)
  double eps2 = 1.0 / 6.0;     // sampling parameter
  double eps3 = 0.2;           // packing parameter
  std::uint64_t seed = 0;
  int tree_count_override = 0;  // > 0 replaces the derived tree count and
                                // forfeits the high-probability guarantee
};

// Derived sampling constants for a graph with n vertices. With the default
// epsilons: b = 108(d+2) ln n, cap = ceil(14b/... ) = ceil(7/6 * 12b),
// accept_threshold = 24b/70 and tree_count = ceil(36.53 d ln n).
class SamplerConfig {
 public:
  explicit SamplerConfig(int n, SamplerOptions opt = {}) : opt_(opt), n_(n) {
    require(n >= 2, errc::bad_argument, "sampler needs at least two vertices");
    require(opt.d >= 1, errc::bad_argument, "d must be at least 1");
    require(opt.eps1 > 0 && opt.eps1 < 1 && opt.eps2 > 0 && opt.eps2 < 1 &&
                opt.eps3 > 0 && opt.eps3 < 1,
            errc::bad_argument, "epsilons must lie in (0,1)");

    double alpha = (2.0 + opt.eps1) / (2.0 - opt.eps1) * (1.0 + opt.eps2);
    f_ = 1.5 - alpha / (1.0 - opt.eps3);
    require(f_ > 0.0, errc::bad_argument, "epsilon choice leaves no constraining fraction");
    require((1.0 - opt.eps3) / (1.0 + opt.eps2) > 2.0 / 3.0, errc::bad_argument,
            "epsilon choice breaks the rejection test");

    double ln_n = std::log(static_cast<double>(n));
    b_ = 3.0 * (opt.d + 2) * ln_n / (opt.eps2 * opt.eps2);
    cap_ = static_cast<std::int64_t>(std::ceil((1.0 + opt.eps2) * 12.0 * b_));
    accept_threshold_ = 0.5 * (1.0 - opt.eps3) / (1.0 + opt.eps2) * b_;
    // The tree multiplier is rounded up at two decimals; -1/ln(1-f) = 36.5212
    // for the default epsilons, giving the advertised 36.53 coefficient.
    tree_multiplier_ = std::ceil(-100.0 / std::log1p(-f_)) / 100.0;
    tree_count_ = static_cast<int>(std::ceil(tree_multiplier_ * opt.d * ln_n));
  }

  int n() const { return n_; }
  int d() const { return opt_.d; }
  double eps1() const { return opt_.eps1; }
  double eps2() const { return opt_.eps2; }
  double eps3() const { return opt_.eps3; }
  std::uint64_t seed() const { return opt_.seed; }
  int round_multiplier() const { return static_cast<int>(std::llround(1.0 / opt_.eps1)); }

  double b() const { return b_; }
  std::int64_t cap() const { return cap_; }
  double accept_threshold() const { return accept_threshold_; }
  double constraining_fraction() const { return f_; }
  double tree_multiplier() const { return tree_multiplier_; }
  int tree_count() const { return tree_count_; }
  int tree_count_override() const { return opt_.tree_count_override; }
  int effective_tree_count() const {
    return opt_.tree_count_override > 0 ? opt_.tree_count_override : tree_count_;
  }

 private:
  SamplerOptions opt_;
  int n_;
  double b_, accept_threshold_, f_, tree_multiplier_;
  std::int64_t cap_;
  int tree_count_;
};

// One draw from min(Binomial(trials, p), cap) by inverse transform sampling.
// The CDF is accumulated term by term (at most cap terms) with a log-space
// pmf recurrence; when the mean exceeds cap by ten standard deviations the
// draw saturates at cap directly.
inline std::int64_t binomial_sample(std::int64_t trials, double p, std::int64_t cap, Rng& rng) {
  require(p > 0.0 && p <= 1.0, errc::bad_argument, "probability must be in (0,1]");
  require(trials >= 1, errc::bad_argument, "trials must be positive");
  require(cap >= 1, errc::bad_argument, "cap must be positive");
  if (p >= 1.0) return std::min(trials, cap);

  double mean = static_cast<double>(trials) * p;
  double sd = std::sqrt(mean * (1.0 - p));
  if (mean - 10.0 * sd > static_cast<double>(cap)) return cap;

  double u = rng.uniform();
  double log_odds = std::log(p) - std::log1p(-p);
  double log_pmf = static_cast<double>(trials) * std::log1p(-p);  // P(X = 0)
  long double cdf = std::exp(static_cast<long double>(log_pmf));
  std::int64_t x = 0;
  for (std::int64_t k = 0; k < cap && k < trials; ++k) {
    if (static_cast<long double>(u) < cdf) break;
    x = k + 1;
    log_pmf += std::log(static_cast<double>(trials - k)) -
               std::log(static_cast<double>(k + 1)) + log_odds;
    cdf += std::exp(static_cast<long double>(log_pmf));
  }
  if (x < cap && x <= trials && static_cast<long double>(u) >= cdf) x = std::min(trials, cap);
  return std::min(x, cap);
}

// Integer-weighted sample graph H; remembers the sampling probability and the
// cut estimate it was built for. `graph.source` maps to the original Graph.
struct SampledGraph {
  IntGraph graph;
  double p_used = 1.0;
  double c_prime_used = 0.0;
};

// H gets, per edge of gp, an independent draw from Binomial(w, p) with
// p = min(b/c', 1), capped at cfg.cap. Weight-0 edges are omitted. Each edge
// draws from its own substream, keyed by edge id.
inline SampledGraph build_sample(const IntGraph& gp, double c_prime, const SamplerConfig& cfg,
                                 Rng& rng) {
  require(c_prime >= 1.0, errc::bad_argument, "cut estimate must be at least 1");
  SampledGraph out;
  out.graph.n = gp.n;
  out.p_used = std::min(cfg.b() / c_prime, 1.0);
  out.c_prime_used = c_prime;
  for (std::size_t i = 0; i < gp.edges.size(); ++i) {
    Rng edge_rng = rng.stream(static_cast<std::uint64_t>(i));
    std::int64_t w = binomial_sample(gp.edges[i].w, out.p_used, cfg.cap(), edge_rng);
    if (w == 0) continue;
    out.graph.edges.push_back({gp.edges[i].u, gp.edges[i].v, w});
    out.graph.source.push_back(gp.source.empty() ? static_cast<int>(i) : gp.source[i]);
  }
  return out;
}

// Weighted draws with replacement from a packing, proportional to tree weight.
inline std::vector<RootedTree> draw_trees(const Packing& p, int count, Rng rng) {
  require(p.weight_units > 0, errc::bad_argument, "cannot draw from an empty packing");
  require(count >= 0, errc::bad_argument, "tree count must be non-negative");
  std::vector<std::int64_t> prefix(p.trees.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < p.trees.size(); ++i) {
    acc += p.trees[i].units;
    prefix[i] = acc;
  }
  std::vector<RootedTree> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::int64_t r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(acc)));
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(prefix.begin(), prefix.end(), r) - prefix.begin());
    out.push_back(p.build_tree(static_cast<int>(idx)));
  }
  return out;
}

struct SamplerTrace {
  struct Round {
    double c_prime = 0.0;
    double p = 0.0;
    std::int64_t sampled_expanded_edges = 0;  // m' of H
    double packing_weight = 0.0;
    std::uint64_t mst_calls = 0;
    char decision = '?';  // 'p' = p==1 accept, 'a' = threshold met, 'f' = final
                          // unconditional round, 'r' = reject
  };
  std::vector<Round> rounds;
  std::vector<std::string> diagnostics;
  std::uint64_t total_mst_calls = 0;
  std::int64_t final_expanded_edges = 0;
  double final_packing_weight = 0.0;
};

namespace detail {

inline Packing pack_round(const SampledGraph& h, const SamplerConfig& cfg, bool* connected) {
  *connected = !h.graph.edges.empty() && h.graph.connected();
  if (!*connected) return Packing{};
  return pack_trees(h.graph, cfg.eps3());
}

}  // namespace detail

// The geometric search for the cut estimate c' (Algorithm 2 step 2): start at
// the upper bound U, sample H, pack it. If p == 1 accept the packing; if the
// packing weight reaches the acceptance threshold run one final round at c'/6
// and accept its packing; otherwise halve c' and repeat. A disconnected H
// counts as a packing of weight 0. Returns effective_tree_count() trees drawn
// from the accepted packing, with edges mapped back to g.
inline std::vector<RootedTree> respecting_trees(const Graph& g, const SamplerConfig& cfg, Rng rng,
                                                SamplerTrace* trace = nullptr) {
  require(g.vertex_count() >= 2, errc::bad_argument, "need at least two vertices");
  IntGraph gp = normalize_and_round(g, cfg.round_multiplier());
  double c_prime = static_cast<double>(min_cut_upper_bound(gp));

  std::optional<Packing> accepted;
  std::uint64_t round_index = 0;
  std::uint64_t total_mst_calls = 0;
  std::int64_t accepted_expanded = 0;

  while (!accepted) {
    require(c_prime >= 1.0, errc::internal, "cut estimate underflow without acceptance");
    Rng round_rng = rng.stream(0, round_index);
    SampledGraph h = build_sample(gp, c_prime, cfg, round_rng);
    bool connected = false;
    Packing packing = detail::pack_round(h, cfg, &connected);
    total_mst_calls += packing.mst_calls;

    SamplerTrace::Round row{c_prime, h.p_used, h.graph.expanded_edge_count(),
                            packing.weight(), packing.mst_calls, 'r'};

    if (h.p_used >= 1.0 && connected) {
      row.decision = 'p';
      accepted = std::move(packing);
      accepted_expanded = row.sampled_expanded_edges;
    } else if (connected && packing.weight() >= cfg.accept_threshold()) {
      row.decision = 'a';
      if (trace) trace->rounds.push_back(row);
      // One unconditional final round at c'/6.
      c_prime /= 6.0;
      ++round_index;
      Rng final_rng = rng.stream(0, round_index);
      SampledGraph hf = build_sample(gp, c_prime, cfg, final_rng);
      bool final_connected = false;
      Packing final_packing = detail::pack_round(hf, cfg, &final_connected);
      total_mst_calls += final_packing.mst_calls;
      require(final_connected, errc::internal, "final sample round is disconnected");
      row = {c_prime, hf.p_used, hf.graph.expanded_edge_count(), final_packing.weight(),
             final_packing.mst_calls, 'f'};
      if (trace && final_packing.weight() < cfg.accept_threshold())
        trace->diagnostics.push_back("final packing below acceptance threshold");
      accepted = std::move(final_packing);
      accepted_expanded = row.sampled_expanded_edges;
    } else {
      c_prime /= 2.0;
    }
    if (trace) trace->rounds.push_back(row);
    ++round_index;
  }

  if (trace) {
    trace->total_mst_calls = total_mst_calls;
    trace->final_expanded_edges = accepted_expanded;
    trace->final_packing_weight = accepted->weight();
  }

  std::vector<RootedTree> drawn =
      draw_trees(*accepted, cfg.effective_tree_count(), rng.stream(1, 0));

  // Tree edges currently reference packing classes; map back to edges of g.
  std::vector<RootedTree> out;
  out.reserve(drawn.size());
  std::vector<int> ids(static_cast<std::size_t>(g.vertex_count() - 1));
  for (const RootedTree& t : drawn) {
    for (int e = 0; e < t.edge_count(); ++e)
      ids[static_cast<std::size_t>(e)] =
          accepted->class_source[static_cast<std::size_t>(t.edge_graph[static_cast<std::size_t>(e)])];
    out.push_back(tree_from_graph(g, ids));
  }
  return out;
}

}  // namespace mincut
