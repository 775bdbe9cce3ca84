#include "ratiocycle/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ratiocycle {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return q;
}

}  // namespace

RatioGraph gen_random_graph(std::size_t n, std::size_t m, IntRange cost_range, IntRange time_range,
                            std::uint64_t seed) {
  if (n == 0) throw InvalidParams("n must be positive");
  if (m < n) throw InvalidParams("m must be at least n to fit the backbone cycle");
  if (cost_range.lo > cost_range.hi) throw InvalidParams("empty cost range");
  if (time_range.lo > time_range.hi) throw InvalidParams("empty time range");
  if (time_range.lo < 1) throw InvalidParams("time range must start at 1 or above");

  std::mt19937_64 rng(seed);
  RatioGraph g;
  g.n = n;
  g.edges.reserve(m);
  const auto perm = random_permutation(n, rng);
  auto add = [&](Vertex u, Vertex v) {
    g.edges.push_back({u, v, from_int64(uniform(rng, cost_range.lo, cost_range.hi)),
                       from_int64(uniform(rng, time_range.lo, time_range.hi))});
  };
  for (std::size_t i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n]);
  for (std::size_t i = n; i < m; ++i) {
    const auto u = static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto v = static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    add(u, v);
  }
  return g;
}

std::pair<RatioGraph, Rational> gen_planted_ratio(std::size_t n, std::size_t m, const Rational& planted,
                                                  std::uint64_t seed, const PlantedOptions& opts) {
  if (n == 0) throw InvalidParams("n must be positive");
  if (m < n) throw InvalidParams("m must be at least n");
  if (opts.max_time < 1 || opts.cost_spread < 0 || opts.max_slack < 0 || opts.potential_spread < 0) {
    throw InvalidParams("bad planted-instance options");
  }
  std::mt19937_64 rng(seed);
  const BigInt q = planted.denominator();
  const auto perm = random_permutation(n, rng);
  const std::size_t len = static_cast<std::size_t>(
      uniform(rng, static_cast<std::int64_t>(std::min<std::size_t>(2, n)), static_cast<std::int64_t>(n)));

  // Planted cycle perm[0] -> perm[1] -> ... -> perm[len-1] -> perm[0].
  std::vector<BigInt> times(len), costs(len);
  BigInt total_time = 0;
  for (std::size_t i = 0; i < len; ++i) {
    times[i] = from_int64(uniform(rng, 1, opts.max_time));
    total_time += times[i];
  }
  BigInt rem = total_time % q;
  if (rem != 0) {
    times[len - 1] += q - rem;
    total_time += q - rem;
  }
  // planted * total_time is an integer because q divides total_time.
  const BigInt total_cost = (planted * Rational(total_time)).numerator();
  BigInt partial = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    costs[i] = from_int64(uniform(rng, -opts.cost_spread, opts.cost_spread));
    partial += costs[i];
  }
  costs[len - 1] = total_cost - partial;

  std::vector<Rational> phi(n);
  for (std::size_t v = 0; v < n; ++v) {
    phi[v] = Rational(from_int64(uniform(rng, -opts.potential_spread, opts.potential_spread))) +
             Rational(from_int64(uniform(rng, 0, 999)), q);
  }
  // Tight planted edges: phi(next) = phi(cur) + c - planted * t.
  for (std::size_t i = 0; i + 1 < len; ++i) {
    phi[perm[i + 1]] = phi[perm[i]] + Rational(costs[i]) - planted * Rational(times[i]);
  }

  RatioGraph g;
  g.n = n;
  g.edges.reserve(m);
  for (std::size_t i = 0; i < len; ++i) {
    g.edges.push_back({perm[i], perm[(i + 1) % len], costs[i], times[i]});
  }
  for (std::size_t i = len; i < m; ++i) {
    const auto u = static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto v = static_cast<Vertex>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const BigInt t = from_int64(uniform(rng, 1, opts.max_time));
    // Smallest integer cost with strictly positive reduced weight, plus slack.
    const Rational threshold = planted * Rational(t) + phi[v] - phi[u];
    const BigInt c = floor_of(threshold) + 1 + from_int64(uniform(rng, 0, opts.max_slack));
    g.edges.push_back({u, v, c, t});
  }
  // Shuffle edge order so the planted cycle is not always listed first.
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return {std::move(g), planted};
}

}  // namespace ratiocycle
