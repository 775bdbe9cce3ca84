#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratiocycle/comparison.hpp"
#include "ratiocycle/generators.hpp"
#include "ratiocycle/min_cycle.hpp"
#include "ratiocycle/parametric.hpp"
#include "ratiocycle/resolver.hpp"

using namespace ratiocycle;

namespace {

using LW = LinearWeight<std::int64_t>;
using DQ = Dist<Rational>;
using DL = Dist<LW>;

Oracle fixed_star(Rational star) {
  return [star](const Rational& l) { return l < star ? Ordering::Less : (star < l ? Ordering::Greater : Ordering::Equal); };
}

}  // namespace

TEST_CASE("concrete comparisons") {
  ConcreteContext<Rational> ctx;
  CHECK(ctx.compare(DQ::of(Rational(3, 2)), DQ::of(Rational(5, 4))) == Ordering::Greater);
  CHECK(ctx.compare(DQ::of(Rational(1)), DQ::inf()) == Ordering::Less);
  CHECK(ctx.compare(DQ::inf(), DQ::inf()) == Ordering::Equal);
  CHECK(ctx.counters.comparison_rounds == 3);
  CHECK(ctx.counters.comparisons == 3);
}

TEST_CASE("infinite sentinel absorbs") {
  CHECK((DQ::inf() + DQ::of(Rational(-5))).infinite);
  CHECK((DL::of({1, 2}) + DL::of({3, -1})).value == LW{4, 1});
  CHECK(-LW{3, -2} == LW{-3, 2});
  const LW big{INT64_MAX, 0};
  const LW one{1, 0};
  CHECK_THROWS_AS(big + one, std::overflow_error);
}

TEST_CASE("parametric comparison with a constant sign on the interval") {
  int calls = 0;
  Resolver<std::int64_t> r(Rational(1), Rational(2), [&](const Rational&) {
    ++calls;
    return Ordering::Equal;
  });
  ParametricContext<std::int64_t> ctx(r);
  CHECK(ctx.compare(DL::of({3, 1}), DL::of({1, 0})) == Ordering::Greater);
  CHECK(calls == 0);
}

TEST_CASE("identical operands need no oracle") {
  Resolver<std::int64_t> r(std::nullopt, std::nullopt, [](const Rational&) -> Ordering {
    throw std::logic_error("oracle must not run");
  });
  ParametricContext<std::int64_t> ctx(r);
  CHECK(ctx.compare(DL::of({7, -3}), DL::of({7, -3})) == Ordering::Equal);
  CHECK(r.oracle_calls() == 0);
}

TEST_CASE("batch accounting and misuse") {
  ConcreteContext<Rational> ctx;
  ctx.batch_begin();
  for (int i = 0; i < 3; ++i) ctx.submit(DQ::of(Rational(i)), DQ::of(Rational(1)));
  ctx.batch_end();
  CHECK(ctx.counters.comparison_rounds == 1);
  CHECK(ctx.counters.comparisons == 3);
  ctx.compare(DQ::of(Rational(0)), DQ::of(Rational(1)));
  CHECK(ctx.counters.comparison_rounds == 2);

  ctx.batch_begin();
  CHECK_THROWS_AS(ctx.batch_begin(), BatchMisuse);
  CHECK_THROWS_AS(ctx.compare(DQ::inf(), DQ::inf()), BatchMisuse);
  ctx.batch_end();
  CHECK_THROWS_AS(ctx.batch_end(), BatchMisuse);
  CHECK_THROWS_AS(ctx.submit(DQ::inf(), DQ::inf()), BatchMisuse);

  Resolver<std::int64_t> r(std::nullopt, std::nullopt, fixed_star(Rational(0)));
  ParametricContext<std::int64_t> p(r);
  p.batch_begin();
  CHECK_THROWS_AS(p.batch_begin(), BatchMisuse);
  p.batch_end();
  CHECK_THROWS_AS(p.batch_end(), BatchMisuse);
}

TEST_CASE("compare(x, y) mirrors compare(y, x)") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const Rational star(oracle::uniform(rng, -30, 30), oracle::uniform(rng, 1, 5));
    Resolver<std::int64_t> r(std::nullopt, std::nullopt, fixed_star(star));
    ParametricContext<std::int64_t> ctx(r);
    ConcreteContext<Rational> cc;
    for (int j = 0; j < 10; ++j) {
      const LW x{oracle::uniform(rng, -20, 20), oracle::uniform(rng, -3, 3)};
      const LW y{oracle::uniform(rng, -20, 20), oracle::uniform(rng, -3, 3)};
      const Ordering xy = ctx.compare(DL::of(x), DL::of(y));
      CHECK(ctx.compare(DL::of(y), DL::of(x)) == mirror(xy));
      // and it is the concrete ordering at lambda*
      CHECK(xy == cc.compare(DQ::of(x.at(star)), DQ::of(y.at(star))));
      const Rational a(oracle::uniform(rng, -9, 9)), b(oracle::uniform(rng, -9, 9));
      CHECK(cc.compare(DQ::of(a), DQ::of(b)) == mirror(cc.compare(DQ::of(b), DQ::of(a))));
    }
  }
}

TEST_CASE("counters never decrease during a run") {
  Resolver<std::int64_t> r(std::nullopt, std::nullopt, fixed_star(Rational(5, 3)));
  ParametricContext<std::int64_t> ctx(r);
  Counters last;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    ctx.compare(DL::of({oracle::uniform(rng, -9, 9), oracle::uniform(rng, -2, 2)}), DL::of({0, 0}));
    CHECK(ctx.counters.comparisons >= last.comparisons);
    CHECK(ctx.counters.comparison_rounds >= last.comparison_rounds);
    CHECK(ctx.counters.oracle_calls >= last.oracle_calls);
    last = ctx.counters;
  }
}

TEST_CASE("logged comparisons agree with concrete ones inside the final interval") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 30; ++it) {
    const auto g = gen_random_graph(6, 14, {-9, 9}, {1, 4}, rng());
    ParametricOptions opts;
    opts.record_log = true;
    opts.centers = it % 2 ? CenterPolicy::greedy() : CenterPolicy::full();
    const RatioSolution s = parametric_min_ratio(g, opts);
    REQUIRE_FALSE(s.diag.log.empty());
    // Reconstruct the final open interval from the probe log.
    std::optional<Rational> lo, hi;
    for (const auto& p : s.diag.probes) {
      if (p.outcome == Ordering::Less && (!lo || *lo < p.lambda)) lo = p.lambda;
      if (p.outcome == Ordering::Greater && (!hi || p.lambda < *hi)) hi = p.lambda;
    }
    std::vector<Rational> points;
    // lambda* itself is always a valid evaluation point; interior points only
    // when lambda* was never hit by a probe.
    points.push_back(s.lambda_star);
    const bool star_probed = std::any_of(s.diag.probes.begin(), s.diag.probes.end(),
                                         [](const Probe& p) { return p.outcome == Ordering::Equal; });
    if (!star_probed && lo && hi) points.push_back((*lo + *hi) / Rational(2));
    for (const auto& l0 : points) {
      for (const auto& c : s.diag.log) {
        const Rational x = c.x_a - l0 * c.x_b;
        const Rational y = c.y_a - l0 * c.y_b;
        const Ordering concrete = x < y ? Ordering::Less : (y < x ? Ordering::Greater : Ordering::Equal);
        CHECK(concrete == c.outcome);
      }
    }
  }
}
