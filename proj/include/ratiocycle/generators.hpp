#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "ratiocycle/graph.hpp"

namespace ratiocycle {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Random graph with a Hamiltonian backbone cycle (through a random vertex
/// permutation) plus m - n edges with uniform random endpoints. Costs and
/// times are uniform in the given closed ranges. Deterministic per seed.
/// Throws InvalidParams if m < n, n == 0, a range is empty or time_range.lo < 1.
RatioGraph gen_random_graph(std::size_t n, std::size_t m, IntRange cost_range, IntRange time_range,
                            std::uint64_t seed);

struct PlantedOptions {
  std::int64_t cost_spread = 9;   // free cycle costs drawn from [-spread, spread]
  std::int64_t max_time = 4;      // transit times drawn from [1, max_time]
  std::int64_t max_slack = 3;     // extra cost on non-planted edges, [0, max_slack]
  std::int64_t potential_spread = 6;
};

/// Random graph whose minimum ratio cycle is a planted simple cycle of ratio
/// exactly `planted`. Returns the graph and its minimum ratio.
///
/// Every edge gets a reduced weight c - planted*t + phi(u) - phi(v) for a
/// random vertex potential phi; planted-cycle edges are made tight (reduced
/// weight zero) and every other edge strictly positive, so the planted cycle
/// is the unique cycle of weight zero at lambda = planted and every other
/// cycle has a larger ratio.
std::pair<RatioGraph, Rational> gen_planted_ratio(std::size_t n, std::size_t m, const Rational& planted,
                                                  std::uint64_t seed, const PlantedOptions& opts = {});

}  // namespace ratiocycle
