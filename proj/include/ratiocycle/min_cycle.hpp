#pragma once

// Sequential minimum weight cycle and the three-way lambda* oracle.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "ratiocycle/comparison.hpp"
#include "ratiocycle/graph.hpp"

namespace ratiocycle {

/// A closed walk of negative weight (first vertex == last vertex).
template <class W>
struct NegativeCycle {
  W weight{};
  std::vector<Vertex> cycle;
  std::vector<std::size_t> edges;
};

/// Minimum weight over all cycles with a simple witness cycle.
template <class W>
struct CycleResult {
  W value{};
  std::vector<Vertex> cycle;
  std::vector<std::size_t> edges;
};

template <class W>
using MinCycleOutcome = std::variant<NegativeCycle<W>, CycleResult<W>>;

/// Bellman-Ford from a virtual zero source; a negative cycle is extracted
/// from the predecessor graph. Otherwise the value is the minimum over edges
/// (u, v) of w(u, v) + d(v, u), with the lowest such edge index as witness.
/// Throws NoCycle if g is acyclic. Instantiated for int64, BigInt, Rational.
template <class W>
MinCycleOutcome<W> min_weight_cycle_seq(const Digraph<W>& g);

extern template MinCycleOutcome<std::int64_t> min_weight_cycle_seq(const Digraph<std::int64_t>&);
extern template MinCycleOutcome<BigInt> min_weight_cycle_seq(const Digraph<BigInt>&);
extern template MinCycleOutcome<Rational> min_weight_cycle_seq(const Digraph<Rational>&);

struct LambdaProbe {
  Ordering position = Ordering::Equal;  // lambda relative to lambda*
  std::vector<Vertex> cycle;            // negative or minimum cycle of G_lambda
  std::vector<std::size_t> edges;
};

/// Scales G_lambda to integer weights c q - p t (lambda = p/q) and runs
/// min_weight_cycle_seq on them, with int64 arithmetic whenever no sum can
/// overflow.
LambdaProbe probe_lambda(const RatioGraph& g, const Rational& lambda);

/// Less if lambda < lambda*, Equal if lambda == lambda*, Greater otherwise.
Ordering compare_to_lambda_star(const RatioGraph& g, const Rational& lambda);

}  // namespace ratiocycle
