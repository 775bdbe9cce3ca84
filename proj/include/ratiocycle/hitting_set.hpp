#pragma once

// Center sets: random sampling and greedy hitting sets over the family of
// canonical floor(h/2)-edge paths.

#include <cstddef>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "ratiocycle/graph.hpp"
#include "ratiocycle/hop_paths.hpp"

namespace ratiocycle {

enum class CenterMode { Randomized, Greedy, Explicit, Full };

std::string_view to_string(CenterMode mode);

struct CenterSet {
  std::vector<Vertex> members;  // sorted, distinct
  CenterMode mode = CenterMode::Explicit;
  std::size_t size_bound = 0;

  friend bool operator==(const CenterSet&, const CenterSet&) = default;
};

/// The sampler drew more than the allowed number of centers.
struct TooLarge {
  std::size_t drawn = 0;
  std::size_t bound = 0;
};

struct PathFamily {
  std::vector<std::vector<Vertex>> sets;  // each sorted, distinct
};

/// ln(n) rounded up to the next double, so thresholds never undershoot.
double ln_upper(std::size_t n);

/// Sampling probability min(3c ln(n) / h, 1); 1 for n < 2.
double sampling_probability(std::size_t n, std::size_t h, double c);

/// Real-valued size threshold 9c n ln(n) / h.
double sampling_threshold(std::size_t n, std::size_t h, double c);

/// Includes every vertex independently with sampling_probability(); returns
/// TooLarge if more than sampling_threshold() vertices were drawn.
std::variant<CenterSet, TooLarge> sample_centers(std::size_t n, std::size_t h, double c, std::mt19937_64& rng);

/// Vertex sets of the canonical paths that have exactly `hops` edges, taken
/// from all-pairs hop tables computed with bound `hops`. With hops == 0 the
/// family is the n singletons.
template <class W>
PathFamily build_path_family(const std::vector<HopTable<W>>& tables, std::size_t n, std::size_t hops) {
  PathFamily family;
  if (hops == 0) {
    for (std::size_t v = 0; v < n; ++v) family.sets.push_back({static_cast<Vertex>(v)});
    return family;
  }
  for (const auto& t : tables) {
    if (t.h != hops) throw std::invalid_argument("hop table bound does not match the family");
    for (std::size_t v = 0; v < t.dist.size(); ++v) {
      if (t.dist[v].infinite || t.hops[v] != hops) continue;
      auto vs = extract_walk(t, static_cast<Vertex>(v))->vertices;
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      family.sets.push_back(std::move(vs));
    }
  }
  return family;
}

/// Repeatedly picks the vertex contained in the most unhit sets, smallest id
/// on ties, until every set is hit.
CenterSet greedy_hitting_set(const PathFamily& family, std::size_t n);

/// ceil((n / q) * (ln k + 1)) with q the smallest set size and k the family
/// size; 0 for an empty family.
std::size_t greedy_size_bound(const PathFamily& family, std::size_t n);

bool hits_all(const PathFamily& family, const std::vector<Vertex>& centers);

inline constexpr int kSampleAttempts = 3;

struct SampleOutcome {
  CenterSet centers;
  int attempts = 0;       // sampler invocations
  bool fell_back = false;  // every attempt was TooLarge, centers = V
};

/// Up to kSampleAttempts draws; falls back to all vertices.
SampleOutcome sample_with_fallback(std::size_t n, std::size_t h, double c, std::mt19937_64& rng);

CenterSet all_vertices(std::size_t n);

}  // namespace ratiocycle
