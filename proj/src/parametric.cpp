#include "ratiocycle/parametric.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ratiocycle/min_cycle.hpp"

namespace ratiocycle {

std::size_t auto_h(std::size_t n, std::size_t m) {
  if (n <= 1) return 1;
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(std::max<std::size_t>(m, 1));
  const double h = std::round(std::sqrt(dn) * std::pow(dm, -0.25) * std::log(dn));
  if (!(h >= 1.0)) return 1;
  return std::min(n, static_cast<std::size_t>(h));
}

std::string algorithm_name(CenterMode mode) {
  switch (mode) {
    case CenterMode::Randomized: return "parametric-randomized";
    case CenterMode::Greedy: return "parametric-greedy";
    case CenterMode::Explicit: return "parametric-explicit";
    case CenterMode::Full: return "parametric-full";
  }
  return "parametric";
}

void require_solvable(const RatioGraph& g) {
  const ValidationReport report = validate(g);
  if (report.ok) return;
  if (report.violations.size() == 1 && report.has(ViolationCode::Acyclic)) throw NoCycle();
  throw InvalidGraph(report);
}

RatioSolution solution_from_edges(const RatioGraph& g, const std::vector<std::size_t>& edges, std::string algorithm) {
  if (edges.empty()) throw std::logic_error("empty cycle");
  RatioSolution s;
  s.algorithm = std::move(algorithm);
  s.cost_sum = 0;
  s.time_sum = 0;
  s.cycle.push_back(g.edges[edges.front()].src);
  for (auto i : edges) {
    const auto& e = g.edges[i];
    if (e.src != s.cycle.back()) throw std::logic_error("cycle edges do not chain");
    s.cycle.push_back(e.dst);
    s.cost_sum += e.cost;
    s.time_sum += e.time;
  }
  if (s.cycle.front() != s.cycle.back()) throw std::logic_error("cycle is not closed");
  if (sgn(s.time_sum) <= 0) throw std::logic_error("cycle without positive transit time");
  s.lambda_star = Rational(s.cost_sum, s.time_sum);
  return s;
}

namespace {

template <class I>
I to_int(const BigInt& x);
template <>
std::int64_t to_int<std::int64_t>(const BigInt& x) {
  return to_int64(x);
}
template <>
BigInt to_int<BigInt>(const BigInt& x) {
  return x;
}

// Every symbolic value of the run is a sum of fewer than 3 (n+2)^2 edge
// weights, and comparisons take one difference; 2^60 leaves room for both.
bool fits_int64_run(const RatioGraph& g) {
  const BigInt n2 = BigInt(static_cast<unsigned long>(g.n + 2));
  BigInt mx = g.max_abs_cost();
  if (g.max_time() > mx) mx = g.max_time();
  if (mx < 1) mx = 1;
  return BigInt(3 * n2 * n2 * mx) < (BigInt(1) << 60);
}

struct RunResult {
  std::optional<Rational> star;
  std::optional<Rational> lo;
  Counters counters;
  SolveDiagnostics diag;
};

template <class I>
RunResult run_generic(const RatioGraph& g, const ParametricOptions& opts, std::size_t h, Oracle oracle) {
  const Rational bound = Rational(BigInt(g.max_abs_cost() * static_cast<unsigned long>(g.n) + 1));
  Resolver<I> resolver(-bound, bound, std::move(oracle));
  ParametricContext<I> ctx(resolver);
  ctx.flip_decision = opts.flip_decision;
  ctx.record_log = opts.record_log;

  Digraph<LinearWeight<I>> lg{g.n, {}};
  lg.edges.reserve(g.m());
  for (const auto& e : g.edges) lg.edges.push_back({e.src, e.dst, {to_int<I>(e.cost), to_int<I>(e.time)}});
  const auto gs = add_super_source(lg);

  RunResult out;
  NegCycleVerdict<LinearWeight<I>> verdict;
  switch (opts.centers.mode) {
    case CenterMode::Randomized: {
      // Centers do not depend on lambda, so a sample is drawn before any
      // comparison. A sample that misses a canonical path can only make the
      // potential check fail; such runs are redrawn.
      std::mt19937_64 rng(opts.centers.seed);
      for (int attempt = 0;; ++attempt) {
        SampleOutcome s;
        if (attempt < kSampleAttempts) {
          s = sample_with_fallback(gs.n, h, opts.centers.c, rng);
        } else {
          s.centers = all_vertices(gs.n);
          s.fell_back = true;
        }
        out.diag.sample_attempts += s.attempts;
        out.diag.fell_back = s.fell_back;
        verdict = detect_with_centers(ctx, gs, s.centers, h);
        if (!verdict.has_negative_cycle || s.fell_back) break;
        ++out.diag.center_redraws;
      }
      break;
    }
    case CenterMode::Greedy:
      verdict = detect_with_centers(ctx, gs, greedy_centers(ctx, gs, h), h);
      break;
    case CenterMode::Explicit:
      throw std::invalid_argument("explicit centers are not supported by the solver");
    case CenterMode::Full:
      verdict = detect_with_centers(ctx, gs, all_vertices(gs.n), h);
      break;
  }
  if (verdict.has_negative_cycle) {
    throw std::logic_error("generic run reported a negative cycle at lambda*");
  }
  out.diag.centers = verdict.centers.members.size();
  out.star = resolver.star();
  out.lo = resolver.lo();
  out.counters = ctx.counters;
  out.counters.oracle_calls = resolver.oracle_calls();
  out.diag.max_batch_roots = resolver.max_batch_roots();
  out.diag.probes = resolver.probe_log();
  out.diag.log = std::move(ctx.log);
  return out;
}

}  // namespace

RatioSolution parametric_min_ratio(const RatioGraph& g, const ParametricOptions& opts) {
  require_solvable(g);
  const std::size_t h = opts.h ? *opts.h : auto_h(g.n, g.m());
  if (h < 1 || h > g.n + 1) throw std::invalid_argument("hop bound must lie in [1, n + 1]");

  Oracle oracle = [&g](const Rational& lambda) { return compare_to_lambda_star(g, lambda); };
  RunResult run;
  bool bigint = opts.force_bigint || !fits_int64_run(g);
  if (!bigint) {
    try {
      run = run_generic<std::int64_t>(g, opts, h, oracle);
    } catch (const std::overflow_error&) {
      bigint = true;
    }
  }
  if (bigint) run = run_generic<BigInt>(g, opts, h, oracle);
  run.diag.bigint = bigint;
  run.diag.h = h;

  Rational star;
  if (run.star) {
    star = *run.star;
  } else {
    // lambda* should have surfaced as a probed root; confirm before trusting lo.
    ++run.counters.oracle_calls;
    if (!run.lo || oracle(*run.lo) != Ordering::Equal) {
      throw std::logic_error("parametric search ended without locating lambda*");
    }
    star = *run.lo;
  }

  const LambdaProbe witness = probe_lambda(g, star);
  if (witness.position != Ordering::Equal) throw std::logic_error("lambda* failed its certificate check");
  RatioSolution s = solution_from_edges(g, witness.edges, algorithm_name(opts.centers.mode));
  if (s.lambda_star != star) throw std::logic_error("witness cycle ratio differs from lambda*");
  s.counters = run.counters;
  s.diag = std::move(run.diag);
  return s;
}

}  // namespace ratiocycle
