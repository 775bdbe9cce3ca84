#include "ratiocycle/baselines.hpp"

#include <algorithm>

#include "ratiocycle/min_cycle.hpp"

namespace ratiocycle {

std::vector<EnumeratedCycle> enumerate_simple_cycles(const RatioGraph& g, std::uint64_t budget) {
  const std::size_t n = g.n;
  std::vector<std::vector<std::size_t>> out_edges(n);
  for (std::size_t i = 0; i < g.m(); ++i) out_edges[static_cast<std::size_t>(g.edges[i].src)].push_back(i);

  std::vector<EnumeratedCycle> cycles;
  std::vector<char> on_path(n, 0);
  std::vector<std::size_t> path_edges;
  std::uint64_t steps = 0;

  // Cycles whose smallest vertex is s: DFS over vertices > s.
  for (std::size_t s = 0; s < n; ++s) {
    struct Frame {
      std::size_t v;
      std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    on_path[s] = 1;
    while (!stack.empty()) {
      if (++steps > budget) throw BudgetExceeded("cycle enumeration exceeded its step budget");
      Frame& f = stack.back();
      if (f.next == out_edges[f.v].size()) {
        on_path[f.v] = 0;
        stack.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        continue;
      }
      const std::size_t ei = out_edges[f.v][f.next++];
      const auto w = static_cast<std::size_t>(g.edges[ei].dst);
      if (w == s) {
        EnumeratedCycle c;
        c.edges = path_edges;
        c.edges.push_back(ei);
        c.cycle.push_back(static_cast<Vertex>(s));
        c.cost_sum = 0;
        c.time_sum = 0;
        for (auto i : c.edges) {
          c.cycle.push_back(g.edges[i].dst);
          c.cost_sum += g.edges[i].cost;
          c.time_sum += g.edges[i].time;
        }
        cycles.push_back(std::move(c));
      } else if (w > s && !on_path[w]) {
        on_path[w] = 1;
        path_edges.push_back(ei);
        stack.push_back({w, 0});
      }
    }
  }
  return cycles;
}

RatioSolution brute_force_min_ratio(const RatioGraph& g, std::uint64_t budget) {
  if (g.n > kBruteForceMaxN) throw TooLargeInstance("brute force is limited to n <= 14");
  require_solvable(g);
  const auto cycles = enumerate_simple_cycles(g, budget);
  const EnumeratedCycle* best = nullptr;
  Rational best_ratio;
  for (const auto& c : cycles) {
    const Rational r(c.cost_sum, c.time_sum);
    if (!best || r < best_ratio || (r == best_ratio && c.cycle < best->cycle)) {
      best = &c;
      best_ratio = r;
    }
  }
  if (!best) throw NoCycle();
  return solution_from_edges(g, best->edges, "brute");
}

Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  if (hi && !(lo < *hi)) throw std::invalid_argument("empty interval");
  // floor(lo)
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
  const Rational next(BigInt(fl + 1));
  if (!hi || next < *hi) {
    // An integer lies inside; pick the one closest to zero.
    if (lo.sign() < 0 && (!hi || hi->sign() > 0)) return Rational(0);
    if (hi && hi->sign() <= 0) {
      BigInt ch;  // ceil(hi) - 1 is the largest integer below hi
      mpz_cdiv_q(ch.get_mpz_t(), hi->numerator().get_mpz_t(), hi->denominator().get_mpz_t());
      return Rational(BigInt(ch - 1));
    }
    return next;
  }
  // lo and hi share the integer part fl: descend on the reciprocals of the
  // fractional parts, which is the Stern-Brocot walk in run-length form.
  const Rational base(fl);
  const Rational x = lo - base;   // in [0, 1)
  const Rational y = *hi - base;  // in (x, 1]
  const Rational inner = x.sign() == 0 ? simplest_between(Rational(1) / y, std::nullopt)
                                       : simplest_between(Rational(1) / y, Rational(1) / x);
  return base + Rational(1) / inner;
}

RatioSolution lawler_binary_search(const RatioGraph& g) {
  require_solvable(g);
  std::uint64_t calls = 0;
  auto oracle = [&](const Rational& lambda) {
    ++calls;
    return compare_to_lambda_star(g, lambda);
  };
  const Rational bound(BigInt(g.max_abs_cost() * static_cast<unsigned long>(g.n) + 1));
  const BigInt denom_cap = g.max_time() * static_cast<unsigned long>(g.n);
  const Rational width_goal = Rational(BigInt(1), BigInt(denom_cap * denom_cap));
  Rational lo = -bound;
  Rational hi = bound;
  std::optional<Rational> star;
  while (!star && !(hi - lo < width_goal)) {
    const Rational mid = (lo + hi) / Rational(2);
    const Ordering o = oracle(mid);
    if (o == Ordering::Less) {
      lo = mid;
    } else if (o == Ordering::Greater) {
      hi = mid;
    } else {
      star = mid;
    }
  }
  if (!star) {
    const Rational cand = simplest_between(lo, hi);
    if (oracle(cand) != Ordering::Equal) throw std::logic_error("Stern-Brocot candidate is not lambda*");
    star = cand;
  }
  const LambdaProbe witness = probe_lambda(g, *star);
  RatioSolution s = solution_from_edges(g, witness.edges, "lawler");
  if (s.lambda_star != *star) throw std::logic_error("witness cycle ratio differs from lambda*");
  s.counters.oracle_calls = calls;
  return s;
}

Rational karp_min_mean(const RatioGraph& g) {
  if (!g.unit_times()) throw PreconditionViolated("karp requires t(e) = 1 on every edge");
  const std::size_t n = g.n;
  // d[k][v]: minimum cost of a k-edge walk ending at v, from any start.
  std::vector<std::vector<std::optional<BigInt>>> d(n + 1, std::vector<std::optional<BigInt>>(n));
  for (std::size_t v = 0; v < n; ++v) d[0][v] = BigInt(0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& e : g.edges) {
      const auto& du = d[k - 1][static_cast<std::size_t>(e.src)];
      if (!du) continue;
      BigInt cand = *du + e.cost;
      auto& dv = d[k][static_cast<std::size_t>(e.dst)];
      if (!dv || cand < *dv) dv = std::move(cand);
    }
  }
  std::optional<Rational> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (!d[n][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (!d[k][v]) continue;
      const Rational r(BigInt(*d[n][v] - *d[k][v]), BigInt(static_cast<unsigned long>(n - k)));
      if (!worst || *worst < r) worst = r;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw NoCycle();
  return *best;
}

}  // namespace ratiocycle
