#include "ratiocycle/min_cycle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ratiocycle/kernels.hpp"

namespace ratiocycle {

namespace {

template <class W>
W add(const W& a, const W& b) {
  return add_weights(a, b);
}

// Cycle of the predecessor graph, if any. With strict relaxations every such
// cycle has negative weight.
template <class W>
std::optional<NegativeCycle<W>> parent_cycle(const Digraph<W>& g, const std::vector<std::int64_t>& pe) {
  const std::size_t n = g.n;
  std::vector<std::uint32_t> mark(n, 0);  // 0 unvisited, otherwise walk id
  for (std::size_t start = 0; start < n; ++start) {
    if (mark[start] != 0) continue;
    const auto id = static_cast<std::uint32_t>(start + 1);
    std::size_t v = start;
    while (mark[v] == 0) {
      mark[v] = id;
      if (pe[v] < 0) break;
      v = static_cast<std::size_t>(g.edges[static_cast<std::size_t>(pe[v])].src);
    }
    if (mark[v] != id || pe[v] < 0) continue;
    NegativeCycle<W> c;
    std::size_t x = v;
    do {
      const auto e = static_cast<std::size_t>(pe[x]);
      c.edges.push_back(e);
      c.weight = add(c.weight, g.edges[e].weight);
      x = static_cast<std::size_t>(g.edges[e].src);
    } while (x != v);
    std::reverse(c.edges.begin(), c.edges.end());
    c.cycle.push_back(g.edges[c.edges.front()].src);
    for (auto e : c.edges) c.cycle.push_back(g.edges[e].dst);
    return c;
  }
  return std::nullopt;
}

// Bellman-Ford from a virtual source joined to every vertex by a zero edge.
// Fills a valid potential, or returns a negative cycle.
template <class W>
std::optional<NegativeCycle<W>> negative_cycle_or_potential(const Digraph<W>& g, std::vector<W>& d) {
  const std::size_t n = g.n;
  d.assign(n, W{});
  std::vector<std::int64_t> pe(n, -1);
  auto pass = [&] {
    bool changed = false;
    for (std::size_t i = 0; i < g.m(); ++i) {
      const auto& e = g.edges[i];
      W cand = add(d[static_cast<std::size_t>(e.src)], e.weight);
      if (cand < d[static_cast<std::size_t>(e.dst)]) {
        d[static_cast<std::size_t>(e.dst)] = std::move(cand);
        pe[static_cast<std::size_t>(e.dst)] = static_cast<std::int64_t>(i);
        changed = true;
      }
    }
    return changed;
  };
  for (std::size_t p = 0; p < n; ++p) {
    if (!pass()) return std::nullopt;
  }
  // Still relaxing after n passes: a negative cycle exists, and it shows up
  // in the predecessor graph after finitely many further passes.
  for (std::size_t extra = 0; extra <= 64 * (n + 1); ++extra) {
    if (auto c = parent_cycle(g, pe)) {
      if (!(c->weight < W{})) throw std::logic_error("predecessor cycle is not negative");
      return c;
    }
    pass();
  }
  throw std::logic_error("negative cycle not found in predecessor graph");
}

// Shortest path tree from s in a graph without negative cycles; returns the
// parent edge of every vertex (-1 for s and unreached vertices).
template <class W>
std::vector<std::int64_t> shortest_path_tree(const Digraph<W>& g, Vertex s) {
  const std::size_t n = g.n;
  std::vector<std::optional<W>> d(n);
  std::vector<std::int64_t> pe(n, -1);
  d[static_cast<std::size_t>(s)] = W{};
  for (std::size_t p = 0; p < n; ++p) {
    bool changed = false;
    for (std::size_t i = 0; i < g.m(); ++i) {
      const auto& e = g.edges[i];
      const auto& du = d[static_cast<std::size_t>(e.src)];
      if (!du) continue;
      W cand = add(*du, e.weight);
      auto& dv = d[static_cast<std::size_t>(e.dst)];
      if (!dv || cand < *dv) {
        dv = std::move(cand);
        pe[static_cast<std::size_t>(e.dst)] = static_cast<std::int64_t>(i);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return pe;
}

// All-pairs distances (nullopt = unreachable) of a graph without negative
// cycles.
template <class W>
std::vector<std::optional<W>> all_pairs(const Digraph<W>& g) {
  const std::size_t n = g.n;
  std::vector<std::optional<W>> d(n * n);
  for (std::size_t v = 0; v < n; ++v) d[v * n + v] = W{};
  for (const auto& e : g.edges) {
    auto& cell = d[static_cast<std::size_t>(e.src) * n + static_cast<std::size_t>(e.dst)];
    if (!cell || e.weight < *cell) cell = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& dik = d[i * n + k];
      if (!dik) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& dkj = d[k * n + j];
        if (!dkj) continue;
        W cand = add(*dik, *dkj);
        auto& dij = d[i * n + j];
        if (!dij || cand < *dij) dij = std::move(cand);
      }
    }
  }
  return d;
}

template <>
std::vector<std::optional<std::int64_t>> all_pairs(const Digraph<std::int64_t>& g) {
  const std::size_t n = g.n;
  std::int64_t mx = 0;
  for (const auto& e : g.edges) mx = std::max(mx, e.weight < 0 ? -e.weight : e.weight);
  if (mx > kernels::kMaxFinite / static_cast<std::int64_t>(2 * n + 2)) {
    // Too wide for the kernel encoding; the plain loops use checked sums.
    std::vector<std::optional<std::int64_t>> d(n * n);
    for (std::size_t v = 0; v < n; ++v) d[v * n + v] = 0;
    for (const auto& e : g.edges) {
      auto& cell = d[static_cast<std::size_t>(e.src) * n + static_cast<std::size_t>(e.dst)];
      if (!cell || e.weight < *cell) cell = e.weight;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!d[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!d[k * n + j]) continue;
          const std::int64_t cand = add_checked(*d[i * n + k], *d[k * n + j]);
          if (!d[i * n + j] || cand < *d[i * n + j]) d[i * n + j] = cand;
        }
      }
    }
    return d;
  }
  std::vector<std::int64_t> m(n * n, kernels::kInf);
  for (std::size_t v = 0; v < n; ++v) m[v * n + v] = 0;
  for (const auto& e : g.edges) {
    auto& cell = m[static_cast<std::size_t>(e.src) * n + static_cast<std::size_t>(e.dst)];
    cell = std::min(cell, e.weight);
  }
  kernels::floyd_warshall(m, n);
  std::vector<std::optional<std::int64_t>> d(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (m[i] != kernels::kInf) d[i] = m[i];
  }
  return d;
}

}  // namespace

template <class W>
MinCycleOutcome<W> min_weight_cycle_seq(const Digraph<W>& g) {
  std::vector<W> potential;
  if (auto neg = negative_cycle_or_potential(g, potential)) return std::move(*neg);

  const std::size_t n = g.n;
  const auto d = all_pairs(g);
  std::optional<W> best;
  std::size_t best_edge = 0;
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto& e = g.edges[i];
    const auto& back = d[static_cast<std::size_t>(e.dst) * n + static_cast<std::size_t>(e.src)];
    if (!back) continue;
    W val = add(e.weight, *back);
    if (!best || val < *best) {
      best = std::move(val);
      best_edge = i;
    }
  }
  if (!best) throw NoCycle();

  const auto& e = g.edges[best_edge];
  CycleResult<W> r;
  r.value = *best;
  std::vector<std::size_t> path;  // dst(e) -> src(e)
  if (e.src != e.dst) {
    const auto pe = shortest_path_tree(g, e.dst);
    for (Vertex x = e.src; x != e.dst;) {
      const auto pi = pe[static_cast<std::size_t>(x)];
      if (pi < 0) throw std::logic_error("witness path broken");
      path.push_back(static_cast<std::size_t>(pi));
      x = g.edges[static_cast<std::size_t>(pi)].src;
    }
    std::reverse(path.begin(), path.end());
  }
  r.edges.push_back(best_edge);
  r.edges.insert(r.edges.end(), path.begin(), path.end());
  r.cycle.push_back(e.src);
  for (auto i : r.edges) r.cycle.push_back(g.edges[i].dst);
  return r;
}

template MinCycleOutcome<std::int64_t> min_weight_cycle_seq(const Digraph<std::int64_t>&);
template MinCycleOutcome<BigInt> min_weight_cycle_seq(const Digraph<BigInt>&);
template MinCycleOutcome<Rational> min_weight_cycle_seq(const Digraph<Rational>&);

namespace {

template <class W>
LambdaProbe probe_scaled(const Digraph<W>& g) {
  LambdaProbe out;
  auto res = min_weight_cycle_seq(g);
  if (auto* neg = std::get_if<NegativeCycle<W>>(&res)) {
    out.position = Ordering::Greater;
    out.cycle = std::move(neg->cycle);
    out.edges = std::move(neg->edges);
    return out;
  }
  auto& c = std::get<CycleResult<W>>(res);
  const int s = sign_of(c.value);
  out.position = s < 0 ? Ordering::Greater : (s > 0 ? Ordering::Less : Ordering::Equal);
  out.cycle = std::move(c.cycle);
  out.edges = std::move(c.edges);
  return out;
}

}  // namespace

LambdaProbe probe_lambda(const RatioGraph& g, const Rational& lambda) {
  const BigInt& p = lambda.numerator();
  const BigInt& q = lambda.denominator();
  std::vector<BigInt> w(g.m());
  BigInt mx = 0;
  for (std::size_t i = 0; i < g.m(); ++i) {
    w[i] = g.edges[i].cost * q - p * g.edges[i].time;
    if (abs(w[i]) > mx) mx = abs(w[i]);
  }
  const BigInt limit = BigInt(1) << 57;
  if (BigInt(mx * static_cast<unsigned long>(g.n + 1)) < limit) {
    Digraph<std::int64_t> d{g.n, {}};
    d.edges.reserve(g.m());
    for (std::size_t i = 0; i < g.m(); ++i) d.edges.push_back({g.edges[i].src, g.edges[i].dst, to_int64(w[i])});
    return probe_scaled(d);
  }
  Digraph<BigInt> d{g.n, {}};
  d.edges.reserve(g.m());
  for (std::size_t i = 0; i < g.m(); ++i) d.edges.push_back({g.edges[i].src, g.edges[i].dst, std::move(w[i])});
  return probe_scaled(d);
}

Ordering compare_to_lambda_star(const RatioGraph& g, const Rational& lambda) {
  return probe_lambda(g, lambda).position;
}

}  // namespace ratiocycle
