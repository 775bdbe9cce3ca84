#pragma once

// Graph data model: cost/transit-time graphs, weighted digraphs, validation,
// the line-oriented text format and lambda substitution.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratiocycle/rational.hpp"

namespace ratiocycle {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct RatioEdge {
  Vertex src = 0;
  Vertex dst = 0;
  BigInt cost;
  BigInt time;
};

/// Directed graph with an integer cost and transit time on every edge.
/// Parallel edges and self-loops are allowed.
struct RatioGraph {
  std::size_t n = 0;
  std::vector<RatioEdge> edges;

  std::size_t m() const { return edges.size(); }
  BigInt max_abs_cost() const;
  BigInt max_time() const;
  bool unit_times() const;
};

template <class W>
struct WeightedEdge {
  Vertex src = 0;
  Vertex dst = 0;
  W weight{};
};

template <class W>
struct Digraph {
  std::size_t n = 0;
  std::vector<WeightedEdge<W>> edges;

  std::size_t m() const { return edges.size(); }
};

using WeightedDigraph = Digraph<Rational>;

enum class ViolationCode { BadVertexId, NegativeTransit, ZeroTransitCycle, Acyclic };

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(ViolationCode code) const;
  std::string summary() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a ratio query is made on a graph without any directed cycle.
class NoCycle : public std::runtime_error {
 public:
  NoCycle() : std::runtime_error("Acyclic: graph has no directed cycle") {}
};

/// Thrown when a solver is handed a graph that fails validate().
class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(const ValidationReport& report)
      : std::runtime_error(report.summary()), report_(report) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

RatioGraph parse_ratio_graph(std::string_view text);
RatioGraph parse_ratio_graph(std::istream& in);
RatioGraph read_ratio_graph_file(const std::string& path);

/// Inverse of parse_ratio_graph (header plus one `a` line per edge).
std::string format_ratio_graph(const RatioGraph& g, std::string_view comment = {});

ValidationReport validate(const RatioGraph& g);

/// w(e) = c(e) - lambda * t(e), edge order preserved.
WeightedDigraph substitute_lambda(const RatioGraph& g, const Rational& lambda);

/// True if the arc list on vertices [0, n) contains a directed cycle.
bool has_cycle(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

}  // namespace ratiocycle
