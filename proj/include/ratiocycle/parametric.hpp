#pragma once

// Minimum ratio cycle by parametric search: negative cycle detection runs
// generically at the unknown lambda*, every batch of comparisons is resolved
// by binary search over its roots with the three-way oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratiocycle/comparison.hpp"
#include "ratiocycle/graph.hpp"
#include "ratiocycle/resolver.hpp"
#include "ratiocycle/sssp.hpp"

namespace ratiocycle {

struct SolveDiagnostics {
  std::size_t h = 0;
  std::size_t centers = 0;       // centers of the run that produced the verdict
  int sample_attempts = 0;       // sampler invocations over all runs
  int center_redraws = 0;        // randomized runs rejected by the potential check
  bool fell_back = false;        // ended up with C = V in randomized mode
  bool bigint = false;           // symbolic weights used arbitrary precision
  std::size_t max_batch_roots = 0;
  std::vector<Probe> probes;
  std::vector<LoggedComparison> log;  // only with ParametricOptions::record_log
};

struct RatioSolution {
  Rational lambda_star;
  std::vector<Vertex> cycle;  // closed walk, first == last
  BigInt cost_sum;
  BigInt time_sum;
  std::string algorithm;
  Counters counters;
  SolveDiagnostics diag;
};

struct ParametricOptions {
  std::optional<std::size_t> h;  // nullopt: auto
  CenterPolicy centers = CenterPolicy::full();
  bool force_bigint = false;
  bool record_log = false;
  /// Test hook: mirror the k-th comparison outcome of the generic run.
  std::optional<std::uint64_t> flip_decision;
};

/// clamp(round(sqrt(n) * m^(-1/4) * ln n), 1, n).
std::size_t auto_h(std::size_t n, std::size_t m);

std::string algorithm_name(CenterMode mode);

/// Throws NoCycle for an acyclic graph and InvalidGraph for any other
/// validation failure.
void require_solvable(const RatioGraph& g);

/// Builds a solution from a cycle given by edge indices.
RatioSolution solution_from_edges(const RatioGraph& g, const std::vector<std::size_t>& edges, std::string algorithm);

RatioSolution parametric_min_ratio(const RatioGraph& g, const ParametricOptions& opts = {});

/// Resolves independent comparisons x vs y at lambda* as one batch.
template <class I>
std::vector<Ordering> resolve_batch(Resolver<I>& state,
                                    const std::vector<std::pair<LinearWeight<I>, LinearWeight<I>>>& comparisons,
                                    Counters* counters = nullptr) {
  ParametricContext<I> ctx(state);
  const auto calls_before = state.oracle_calls();
  ctx.batch_begin();
  for (const auto& [x, y] : comparisons) ctx.submit(Dist<LinearWeight<I>>::of(x), Dist<LinearWeight<I>>::of(y));
  ctx.batch_end();
  std::vector<Ordering> out;
  out.reserve(comparisons.size());
  for (const auto& [x, y] : comparisons) out.push_back(ctx.decide(Dist<LinearWeight<I>>::of(x), Dist<LinearWeight<I>>::of(y)));
  if (counters) {
    ctx.counters.oracle_calls = state.oracle_calls() - calls_before;
    *counters += ctx.counters;
  }
  return out;
}

/// Sign of w at lambda*, as an ordering against zero.
template <class I>
Ordering sign_at_star(Resolver<I>& state, const LinearWeight<I>& w) {
  return resolve_batch(state, {{w, LinearWeight<I>{}}}).front();
}

}  // namespace ratiocycle
