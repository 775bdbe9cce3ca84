#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratiocycle/generators.hpp"
#include "ratiocycle/hop_paths.hpp"
#include "ratiocycle/resolver.hpp"

using namespace ratiocycle;

namespace {

using Ctx = ConcreteContext<Rational>;
using DQ = Dist<Rational>;

WeightedDigraph make(std::size_t n, std::vector<std::tuple<int, int, long>> es) {
  WeightedDigraph g{n, {}};
  for (auto [u, v, w] : es) g.edges.push_back({u, v, Rational(w)});
  return g;
}

bool same(const DQ& d, const oracle::OptQ& o) { return d.infinite ? !o : (o && *o == d.value); }

DistMatrix<Rational> from_oracle(const oracle::Matrix& m) {
  std::vector<Vertex> ord(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) ord[i] = static_cast<Vertex>(i);
  DistMatrix<Rational> out(ord);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) = m[i][j] ? DQ::of(*m[i][j]) : DQ::inf();
  }
  return out;
}

oracle::Matrix oracle_adjacency(const WeightedDigraph& g) {
  oracle::Matrix m(g.n, std::vector<oracle::OptQ>(g.n));
  for (std::size_t v = 0; v < g.n; ++v) m[v][v] = Rational(0);
  for (const auto& e : g.edges) {
    auto& cell = m[static_cast<std::size_t>(e.src)][static_cast<std::size_t>(e.dst)];
    if (oracle::less(e.weight, cell)) cell = e.weight;
  }
  return m;
}

}  // namespace

TEST_CASE("path examples") {
  const auto g = make(3, {{0, 1, 1}, {1, 2, 1}});
  Ctx ctx;
  const auto t1 = bellman_ford_hop(ctx, g, 0, 1);
  CHECK(t1.dist[0] == DQ::of(Rational(0)));
  CHECK(t1.dist[1] == DQ::of(Rational(1)));
  CHECK(t1.dist[2].infinite);
  const auto t2 = bellman_ford_hop(ctx, g, 0, 2);
  CHECK(t2.dist[2] == DQ::of(Rational(2)));
  CHECK(t2.hops[2] == 2);
  CHECK(*extract_path(t2, 0) == std::vector<Vertex>{0});
  CHECK_FALSE(extract_path(t1, 2));
  CHECK_THROWS_AS(bellman_ford_hop(ctx, g, 0, 0), std::invalid_argument);
}

TEST_CASE("diamond ties go to the lexicographically smaller path") {
  // in-edge order puts the path through 2 first, so index order alone would
  // pick it
  const auto g = make(4, {{0, 2, 1}, {2, 3, 1}, {0, 1, 1}, {1, 3, 1}});
  for (bool direct : {true, false}) {
    Ctx ctx;
    ctx.direct_loops = direct;
    const auto t = bellman_ford_hop(ctx, g, 0, 2);
    CHECK(t.dist[3] == DQ::of(Rational(2)));
    CHECK(t.layers[2][3].pred == 1);
    CHECK(*extract_path(t, 3) == std::vector<Vertex>{0, 1, 3});
    const auto w = *extract_walk(t, 3);
    CHECK(w.edges == std::vector<std::size_t>{2, 3});
  }
}

TEST_CASE("disconnected target is unreached") {
  const auto g = make(3, {{0, 1, 4}});
  Ctx ctx;
  const auto t = bellman_ford_hop(ctx, g, 0, 2);
  CHECK_FALSE(extract_path(t, 2));
}

TEST_CASE("min-plus examples") {
  Ctx ctx;
  oracle::Matrix id(3, std::vector<oracle::OptQ>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = Rational(0);
  const auto a = from_oracle(id);
  CHECK(minplus_product(ctx, a, a) == a);

  oracle::Matrix m2 = {{Rational(0), Rational(1)}, {std::nullopt, Rational(0)}};
  const auto b = from_oracle(m2);
  CHECK(minplus_product(ctx, b, b) == b);
}

TEST_CASE("repeated squaring examples") {
  Ctx ctx;
  const auto one = from_oracle({{Rational(-2)}});
  CHECK(apsp_repeated_squaring(ctx, one) == one);
  const auto two = from_oracle({{Rational(0), Rational(5)}, {Rational(7), Rational(0)}});
  CHECK(apsp_repeated_squaring(ctx, two) == two);

  // 3-vertex chain
  const auto chain = make(3, {{0, 1, 2}, {1, 2, 3}});
  const auto closed = apsp_repeated_squaring(ctx, adjacency_matrix(chain));
  for (Vertex s = 0; s < 3; ++s) {
    const auto d = oracle::bellman_ford(chain, s);
    for (std::size_t j = 0; j < 3; ++j) CHECK(same(closed.at(static_cast<std::size_t>(s), j), d[j]));
  }
}

TEST_CASE("random nonnegative 6-vertex matrix matches hop-limited Bellman-Ford") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 20; ++it) {
    WeightedDigraph g{6, {}};
    for (int u = 0; u < 6; ++u) {
      for (int v = 0; v < 6; ++v) {
        if (u != v) g.edges.push_back({u, v, Rational(oracle::uniform(rng, 0, 20))});
      }
    }
    Ctx ctx;
    const auto closed = apsp_repeated_squaring(ctx, adjacency_matrix(g));
    for (Vertex s = 0; s < 6; ++s) {
      const auto t = bellman_ford_hop(ctx, g, s, 5);
      for (std::size_t j = 0; j < 6; ++j) CHECK(closed.at(static_cast<std::size_t>(s), j) == t.dist[j]);
    }
  }
}

TEST_CASE("hop tables agree with the naive recurrence") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 9));
    const auto g = oracle::random_weighted(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 0, 25)), -5, 9);
    const Vertex s = static_cast<Vertex>(oracle::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const std::size_t h = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
    for (bool direct : {true, false}) {
      Ctx ctx;
      ctx.direct_loops = direct;
      const auto t = bellman_ford_hop(ctx, g, s, h);
      const auto d = oracle::hop_limited(g, s, h);
      for (std::size_t v = 0; v < n; ++v) {
        CHECK(same(t.dist[v], d[v]));
        if (t.dist[v].infinite) continue;
        // the extracted walk has hops[v] edges and weight dist[v]
        const auto w = *extract_walk(t, static_cast<Vertex>(v));
        CHECK(w.edges.size() == t.hops[v]);
        CHECK(w.vertices.front() == s);
        CHECK(w.vertices.back() == static_cast<Vertex>(v));
        Rational sum(0);
        for (std::size_t i = 0; i < w.edges.size(); ++i) {
          const auto& e = g.edges[w.edges[i]];
          CHECK(e.src == w.vertices[i]);
          CHECK(e.dst == w.vertices[i + 1]);
          sum = sum + e.weight;
        }
        CHECK(sum == t.dist[v].value);
      }
    }
  }
}

TEST_CASE("direct loops and tournaments produce identical tables") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 10));
    const auto g = oracle::random_weighted(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 0, 30)), -3, 3);
    const std::size_t h = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    Ctx a, b;
    b.direct_loops = false;
    const auto ta = bellman_ford_hop(a, g, 0, h);
    const auto tb = bellman_ford_hop(b, g, 0, h);
    CHECK(ta.dist == tb.dist);
    CHECK(ta.hops == tb.hops);
    for (std::size_t v = 0; v < n; ++v) {
      if (!ta.dist[v].infinite) CHECK(extract_walk(ta, static_cast<Vertex>(v))->edges == extract_walk(tb, static_cast<Vertex>(v))->edges);
    }
  }
}

TEST_CASE("lexicographically smallest minimum walks") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    // small weights make ties frequent; positive cycles keep prefixes optimal
    const auto g = oracle::random_no_negative_cycle(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 0, 12)), 1);
    const std::size_t h = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    Ctx ctx;
    const auto t = bellman_ford_hop(ctx, g, 0, h);
    for (std::size_t v = 0; v < n; ++v) {
      const auto best = oracle::lex_best_walk(g, 0, static_cast<Vertex>(v), h);
      CHECK(best.has_value() == !t.dist[v].infinite);
      if (best) CHECK(*extract_path(t, static_cast<Vertex>(v)) == best->second);
    }
  }
}

TEST_CASE("hop monotonicity") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 2, 10));
    const auto g = oracle::random_weighted(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, 30)), -9, 9);
    Ctx ctx;
    std::vector<DQ> prev;
    for (std::size_t h = 1; h <= n; ++h) {
      const auto t = bellman_ford_hop(ctx, g, 0, h);
      if (!prev.empty()) {
        for (std::size_t v = 0; v < n; ++v) CHECK(compare_concrete(t.dist[v], prev[v]) != Ordering::Greater);
      }
      prev = t.dist;
    }
  }
}

TEST_CASE("h = n - 1 gives true distances without negative cycles") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 2, 12));
    const auto g = oracle::random_no_negative_cycle(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, 40)));
    Ctx ctx;
    const auto t = bellman_ford_hop(ctx, g, 0, n - 1);
    bool negative = false;
    const auto d = oracle::bellman_ford(g, 0, &negative);
    REQUIRE_FALSE(negative);
    for (std::size_t v = 0; v < n; ++v) CHECK(same(t.dist[v], d[v]));
  }
}

TEST_CASE("prefixes of canonical shortest paths are canonical") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 2, 12));
    const auto g = oracle::random_no_negative_cycle(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, 40)), 1);
    Ctx ctx;
    const auto t = bellman_ford_hop(ctx, g, 0, n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      const auto p = extract_path(t, static_cast<Vertex>(v));
      if (!p) continue;
      for (std::size_t i = 0; i < p->size(); ++i) {
        const std::vector<Vertex> prefix(p->begin(), p->begin() + static_cast<std::ptrdiff_t>(i + 1));
        CHECK(*extract_path(t, (*p)[i]) == prefix);
      }
    }
  }
}

TEST_CASE("repeated squaring equals iterated naive min-plus") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 150; ++it) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
    const auto g = oracle::random_no_negative_cycle(rng, k, static_cast<std::size_t>(oracle::uniform(rng, 0, 20)));
    const auto m = oracle_adjacency(g);
    oracle::Matrix power = m;
    for (std::size_t i = 1; i + 1 < k; ++i) power = oracle::minplus(power, m);
    for (bool direct : {true, false}) {
      Ctx ctx;
      ctx.direct_loops = direct;
      ClosureTrace trace;
      const auto closed = apsp_repeated_squaring(ctx, from_oracle(m));
      CHECK(closed == from_oracle(power));
      CHECK(apsp_repeated_squaring(ctx, from_oracle(m), &trace) == closed);
    }
    // int64 weights take the kernel path when there is no trace
    Digraph<std::int64_t> gi{k, {}};
    for (const auto& e : g.edges) gi.edges.push_back({e.src, e.dst, to_int64(e.weight.numerator())});
    ConcreteContext<std::int64_t> ci;
    const auto ci_closed = apsp_repeated_squaring(ci, adjacency_matrix(gi));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto& x = ci_closed.at(i, j);
        CHECK(x.infinite == !power[i][j]);
        if (!x.infinite) CHECK(Rational(from_int64(x.value)) == *power[i][j]);
      }
    }
  }
}

TEST_CASE("symbolic tables evaluate to concrete tables at lambda*") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 40; ++it) {
    const auto g = gen_random_graph(7, 16, {-9, 9}, {1, 4}, rng());
    const Rational star(oracle::uniform(rng, -9, 9), oracle::uniform(rng, 1, 4));
    Resolver<std::int64_t> r(std::nullopt, std::nullopt, [&](const Rational& l) {
      return l < star ? Ordering::Less : (star < l ? Ordering::Greater : Ordering::Equal);
    });
    ParametricContext<std::int64_t> pctx(r);
    Digraph<LinearWeight<std::int64_t>> lg{g.n, {}};
    for (const auto& e : g.edges) lg.edges.push_back({e.src, e.dst, {to_int64(e.cost), to_int64(e.time)}});
    const auto concrete_g = substitute_lambda(g, star);
    Ctx ctx;
    const std::size_t h = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const auto tp = bellman_ford_hop(pctx, lg, 0, h);
    const auto tc = bellman_ford_hop(ctx, concrete_g, 0, h);
    for (std::size_t v = 0; v < g.n; ++v) {
      CHECK(tp.dist[v].infinite == tc.dist[v].infinite);
      if (tc.dist[v].infinite) continue;
      CHECK(tp.dist[v].value.at(star) == tc.dist[v].value);
      CHECK(extract_walk(tp, static_cast<Vertex>(v))->edges == extract_walk(tc, static_cast<Vertex>(v))->edges);
    }
  }
}
