#pragma once

// Reference solvers: simple cycle enumeration, Lawler's binary search and
// Karp's minimum mean cycle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ratiocycle/graph.hpp"
#include "ratiocycle/parametric.hpp"

namespace ratiocycle {

inline constexpr std::size_t kBruteForceMaxN = 14;
inline constexpr std::uint64_t kDefaultStepBudget = 200'000'000;

class TooLargeInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumeratedCycle {
  std::vector<Vertex> cycle;  // starts and ends at its smallest vertex
  std::vector<std::size_t> edges;
  BigInt cost_sum;
  BigInt time_sum;
};

/// Every simple directed cycle, once per distinct edge sequence (parallel
/// edges give distinct cycles). Throws BudgetExceeded after `budget` DFS steps.
std::vector<EnumeratedCycle> enumerate_simple_cycles(const RatioGraph& g, std::uint64_t budget = kDefaultStepBudget);

/// Minimum over all simple cycles; ties go to the lexicographically smallest
/// vertex sequence. Throws TooLargeInstance if n > 14.
RatioSolution brute_force_min_ratio(const RatioGraph& g, std::uint64_t budget = kDefaultStepBudget);

/// Simplest fraction (smallest denominator, then smallest magnitude) strictly
/// between lo and hi; hi == nullopt stands for +infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi);

/// Bisection with the oracle until the interval is narrower than 1/D^2,
/// D = n * Tmax, then the only candidate fraction is found by Stern-Brocot
/// descent and confirmed.
RatioSolution lawler_binary_search(const RatioGraph& g);

/// Karp's recurrence over all start vertices. Requires t(e) = 1 everywhere.
Rational karp_min_mean(const RatioGraph& g);

}  // namespace ratiocycle
