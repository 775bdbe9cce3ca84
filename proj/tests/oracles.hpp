#pragma once

// Independent reference computations for the tests. Deliberately naive and
// written without the library's algorithms: plain Rational loops, exhaustive
// enumeration, hand-rolled generators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ratiocycle/graph.hpp"

namespace oracle {

using ratiocycle::BigInt;
using ratiocycle::Rational;
using ratiocycle::RatioGraph;
using ratiocycle::Vertex;
using ratiocycle::WeightedDigraph;

using OptQ = std::optional<Rational>;

inline bool less(const OptQ& a, const OptQ& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

/// Bellman-Ford to a fixpoint. Sets `negative` if relaxation never settles.
inline std::vector<OptQ> bellman_ford(const WeightedDigraph& g, Vertex s, bool* negative = nullptr) {
  std::vector<OptQ> d(g.n);
  d[static_cast<std::size_t>(s)] = Rational(0);
  bool changed = true;
  for (std::size_t pass = 0; pass <= g.n && changed; ++pass) {
    changed = false;
    for (const auto& e : g.edges) {
      const auto& du = d[static_cast<std::size_t>(e.src)];
      if (!du) continue;
      OptQ cand = *du + e.weight;
      if (less(cand, d[static_cast<std::size_t>(e.dst)])) {
        d[static_cast<std::size_t>(e.dst)] = cand;
        changed = true;
      }
    }
  }
  if (negative) *negative = changed;
  return d;
}

/// d_k(v) = min(d_{k-1}(v), min over (u,v) of d_{k-1}(u) + w), k = 1..h.
inline std::vector<OptQ> hop_limited(const WeightedDigraph& g, Vertex s, std::size_t h) {
  std::vector<OptQ> d(g.n);
  d[static_cast<std::size_t>(s)] = Rational(0);
  for (std::size_t k = 0; k < h; ++k) {
    std::vector<OptQ> next = d;
    for (const auto& e : g.edges) {
      const auto& du = d[static_cast<std::size_t>(e.src)];
      if (!du) continue;
      OptQ cand = *du + e.weight;
      if (less(cand, next[static_cast<std::size_t>(e.dst)])) next[static_cast<std::size_t>(e.dst)] = cand;
    }
    d = std::move(next);
  }
  return d;
}

/// Minimum-weight walk with at most h edges from s to t, ties broken by the
/// lexicographically smallest vertex sequence. Exhaustive; tiny inputs only.
inline std::optional<std::pair<Rational, std::vector<Vertex>>> lex_best_walk(const WeightedDigraph& g, Vertex s,
                                                                               Vertex t, std::size_t h) {
  std::optional<std::pair<Rational, std::vector<Vertex>>> best;
  std::vector<Vertex> walk{s};
  std::function<void(Rational)> go = [&](Rational w) {
    if (walk.back() == t) {
      if (!best || w < best->first || (w == best->first && walk < best->second)) best = {{w, walk}};
    }
    if (walk.size() - 1 == h) return;
    for (const auto& e : g.edges) {
      if (e.src != walk.back()) continue;
      walk.push_back(e.dst);
      go(w + e.weight);
      walk.pop_back();
    }
  };
  go(Rational(0));
  return best;
}

using Matrix = std::vector<std::vector<OptQ>>;

inline Matrix minplus(const Matrix& a, const Matrix& b) {
  const std::size_t k = a.size();
  Matrix c(k, std::vector<OptQ>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l] && b[l][j]) {
          OptQ cand = *a[i][l] + *b[l][j];
          if (less(cand, c[i][j])) c[i][j] = cand;
        }
      }
    }
  }
  return c;
}

/// Simple cycles as edge-index lists, found by trying every vertex sequence
/// that starts at its minimum (independent of the library enumerator).
inline std::vector<std::vector<std::size_t>> simple_cycles(const RatioGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> edges;
  std::vector<char> used(g.n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t start, std::size_t v) {
    for (std::size_t i = 0; i < g.m(); ++i) {
      const auto& e = g.edges[i];
      if (static_cast<std::size_t>(e.src) != v) continue;
      const auto w = static_cast<std::size_t>(e.dst);
      edges.push_back(i);
      if (w == start) {
        out.push_back(edges);
      } else if (w > start && !used[w]) {
        used[w] = 1;
        go(start, w);
        used[w] = 0;
      }
      edges.pop_back();
    }
  };
  for (std::size_t s = 0; s < g.n; ++s) {
    used[s] = 1;
    go(s, s);
    used[s] = 0;
  }
  return out;
}

inline std::optional<Rational> min_ratio(const RatioGraph& g) {
  std::optional<Rational> best;
  for (const auto& c : simple_cycles(g)) {
    BigInt cs = 0, ts = 0;
    for (auto i : c) {
      cs += g.edges[i].cost;
      ts += g.edges[i].time;
    }
    const Rational r(cs, ts);
    if (!best || r < *best) best = r;
  }
  return best;
}

/// True if some simple cycle has negative weight c - lambda t.
inline bool has_negative_cycle(const RatioGraph& g, const Rational& lambda) {
  for (const auto& c : simple_cycles(g)) {
    Rational w(0);
    for (auto i : c) w = w + Rational(g.edges[i].cost) - lambda * Rational(g.edges[i].time);
    if (w.sign() < 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Hand-rolled generators.

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Arbitrary digraph (may be acyclic, may have loops and parallel edges).
inline WeightedDigraph random_weighted(std::mt19937_64& rng, std::size_t n, std::size_t m, std::int64_t lo,
                                       std::int64_t hi) {
  WeightedDigraph g{n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    g.edges.push_back({static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1)),
                       static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1)),
                       Rational(uniform(rng, lo, hi))});
  }
  return g;
}

/// Weighted digraph without negative cycles: weights w + p(u) - p(v) with
/// w >= min_slack and a random potential p. min_slack = 1 also rules out
/// zero-weight cycles.
inline WeightedDigraph random_no_negative_cycle(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                std::int64_t min_slack = 0) {
  std::vector<std::int64_t> p(n);
  for (auto& x : p) x = uniform(rng, -6, 6);
  WeightedDigraph g{n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    g.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), Rational(uniform(rng, min_slack, 5) + p[u] - p[v])});
  }
  return g;
}

}  // namespace oracle
