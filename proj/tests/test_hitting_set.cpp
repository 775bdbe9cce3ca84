#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ratiocycle/generators.hpp"
#include "ratiocycle/hitting_set.hpp"
#include "ratiocycle/hop_paths.hpp"

using namespace ratiocycle;

namespace {

PathFamily family_of(const WeightedDigraph& g, std::size_t hops) {
  ConcreteContext<Rational> ctx;
  std::vector<HopTable<Rational>> tables;
  if (hops > 0) {
    std::vector<Vertex> all(g.n);
    for (std::size_t v = 0; v < g.n; ++v) all[v] = static_cast<Vertex>(v);
    tables = bellman_ford_hop_multi(ctx, g, std::span<const Vertex>(all), hops);
  }
  return build_path_family(tables, g.n, hops);
}

WeightedDigraph make(std::size_t n, std::vector<std::tuple<int, int, long>> es) {
  WeightedDigraph g{n, {}};
  for (auto [u, v, w] : es) g.edges.push_back({u, v, Rational(w)});
  return g;
}

// Hits every set, checked element by element.
bool hits(const PathFamily& f, const std::vector<Vertex>& c) {
  for (const auto& s : f.sets) {
    bool any = false;
    for (Vertex v : s) any = any || std::find(c.begin(), c.end(), v) != c.end();
    if (!any) return false;
  }
  return true;
}

PathFamily random_family(std::mt19937_64& rng, std::size_t sets, std::size_t size, std::size_t n) {
  PathFamily f;
  for (std::size_t i = 0; i < sets; ++i) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    f.sets.push_back(s);
  }
  return f;
}

}  // namespace

TEST_CASE("sampling with h = 1 takes every vertex") {
  std::mt19937_64 rng(1);
  CHECK(sampling_probability(50, 1, 1.0) == 1.0);
  const auto r = sample_centers(50, 1, 1.0, rng);
  REQUIRE(std::holds_alternative<CenterSet>(r));
  CHECK(std::get<CenterSet>(r).members.size() == 50);
}

TEST_CASE("n = 2, h = 2 clamps to probability one") {
  std::mt19937_64 rng(2);
  const auto r = sample_centers(2, 2, 1.0, rng);
  REQUIRE(std::holds_alternative<CenterSet>(r));
  CHECK(std::get<CenterSet>(r).members == std::vector<Vertex>{0, 1});
}

TEST_CASE("sample size concentrates and respects its bound") {
  std::mt19937_64 rng(1000);
  CHECK(static_cast<std::size_t>(std::ceil(sampling_threshold(1000, 100, 1.0))) == 622);
  double total = 0;
  for (int run = 0; run < 100; ++run) {
    const auto r = sample_centers(1000, 100, 1.0, rng);
    REQUIRE(std::holds_alternative<CenterSet>(r));
    const auto& c = std::get<CenterSet>(r);
    CHECK(c.members.size() <= 622);
    CHECK(c.size_bound == 622);
    CHECK(std::is_sorted(c.members.begin(), c.members.end()));
    total += static_cast<double>(c.members.size());
  }
  const double mean = total / 100.0;
  // expected 3 ln(1000) / 100 * 1000 ~ 207.2, sd of the mean ~ 1.3
  CHECK(mean > 200.0);
  CHECK(mean < 215.0);
}

TEST_CASE("sampler argument checks") {
  std::mt19937_64 rng(3);
  CHECK_THROWS_AS(sample_centers(10, 0, 1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_centers(10, 4, 0.5, rng), std::invalid_argument);
  CHECK(ln_upper(1000) > std::log(1000.0));
}

TEST_CASE("fallback after repeated oversized draws") {
  // p = 1 here and n < threshold, so the first draw always fits
  std::mt19937_64 rng(4);
  const auto ok = sample_with_fallback(30, 5, 1.0, rng);
  CHECK(ok.attempts == 1);
  CHECK_FALSE(ok.fell_back);
  CHECK(all_vertices(4).members == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("path family examples") {
  const auto path = make(3, {{0, 1, 1}, {1, 2, 1}});
  const auto f2 = family_of(path, 2);
  REQUIRE(f2.sets.size() == 1);
  CHECK(f2.sets[0] == std::vector<Vertex>{0, 1, 2});

  const auto f1 = family_of(path, 1);
  REQUIRE(f1.sets.size() == 2);
  for (const auto& s : f1.sets) CHECK(s.size() == 2);

  const auto k3 = make(3, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 1}, {2, 1, 1}});
  CHECK(family_of(k3, 2).sets.empty());

  const auto f0 = family_of(path, 0);
  CHECK(f0.sets.size() == 3);
}

TEST_CASE("path family sets match canonical paths") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    const auto g = oracle::random_no_negative_cycle(rng, 8, 20, 1);
    for (std::size_t hops = 1; hops <= 3; ++hops) {
      const auto f = family_of(g, hops);
      for (const auto& s : f.sets) {
        CHECK(s.size() >= 2);
        CHECK(s.size() <= hops + 1);
        CHECK(std::is_sorted(s.begin(), s.end()));
      }
    }
  }
}

TEST_CASE("greedy examples") {
  PathFamily a{{{0, 1, 2}}};
  CHECK(greedy_hitting_set(a, 3).members == std::vector<Vertex>{0});
  PathFamily b{{{0, 1}, {1, 2}, {2, 3}}};
  CHECK(greedy_hitting_set(b, 4).members == std::vector<Vertex>{1, 2});
  CHECK(greedy_hitting_set(PathFamily{}, 5).members.empty());
}

TEST_CASE("greedy on random families") {
  std::mt19937_64 rng(50);
  {
    const auto f = random_family(rng, 50, 5, 40);
    CHECK(greedy_size_bound(f, 40) == 40);
  }
  for (int it = 0; it < 100; ++it) {
    const auto f = random_family(rng, 50, 5, 40);
    const auto c = greedy_hitting_set(f, 40);
    CHECK(hits(f, c.members));
    CHECK(hits_all(f, c.members));
    CHECK(c.members.size() <= greedy_size_bound(f, 40));
    CHECK(greedy_hitting_set(f, 40) == c);
  }
}

TEST_CASE("hits_all agrees with a direct check") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 200; ++it) {
    const auto f = random_family(rng, 6, 3, 10);
    std::vector<Vertex> c;
    for (Vertex v = 0; v < 10; ++v) {
      if (rng() % 3 == 0) c.push_back(v);
    }
    CHECK(hits_all(f, c) == hits(f, c));
  }
}

TEST_CASE("sampled centers usually hit the canonical paths") {
  const auto rg = gen_random_graph(60, 75, {1, 9}, {1, 1}, 8);
  const auto g = substitute_lambda(rg, Rational(0));
  const std::size_t h = 24;
  const auto f = family_of(g, h / 2);
  REQUIRE_FALSE(f.sets.empty());
  int hit = 0, returned = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const auto r = sample_centers(g.n, h, 1.0, rng);
    if (!std::holds_alternative<CenterSet>(r)) continue;
    ++returned;
    const auto& c = std::get<CenterSet>(r);
    CHECK(c.members.size() <= c.size_bound);
    if (hits(f, c.members)) ++hit;
  }
  CHECK(returned >= 95);
  CHECK(hit >= 95);
}
