#pragma once

// Single-source shortest paths through a center set, and negative cycle
// detection by checking the resulting distances as a potential.
//
//   1. h-hop Bellman-Ford from every center and from s
//   2. center graph H with w_H(x, y) = d^h(x, y), closed by min-plus squaring
//   3. delta(t) = min over hubs x of d_H(s, x) + d^h(x, t)

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ratiocycle/hitting_set.hpp"
#include "ratiocycle/hop_paths.hpp"

namespace ratiocycle {

template <class W>
struct SsspResult {
  Vertex source = 0;
  std::vector<Dist<W>> delta;
  /// Index into hubs of the x achieving delta[t]; -1 when unreached.
  std::vector<std::int32_t> cert;
  std::vector<Vertex> hubs;  // sorted centers plus the source
  std::vector<HopTable<W>> tables;  // one per hub, same order
  DistMatrix<W> closure;            // d_H over hubs
  std::optional<ClosureTrace> trace;
};

inline std::vector<Vertex> hubs_of(const std::vector<Vertex>& centers, Vertex source) {
  std::vector<Vertex> hubs = centers;
  hubs.push_back(source);
  std::sort(hubs.begin(), hubs.end());
  hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
  return hubs;
}

/// With keep_trace the squaring winners are recorded, which lets
/// reconstruct_walk rebuild the walk behind every finite delta.
template <class Ctx>
SsspResult<typename Ctx::weight_type> hitting_set_sssp(Ctx& ctx, const Digraph<typename Ctx::weight_type>& g,
                                                      Vertex source, const std::vector<Vertex>& centers,
                                                      std::size_t h, bool keep_trace = false) {
  using W = typename Ctx::weight_type;
  using D = Dist<W>;
  if (h < 1 || h > std::max<std::size_t>(g.n, 1)) throw std::invalid_argument("hop bound must lie in [1, n]");
  SsspResult<W> r;
  r.source = source;
  r.hubs = hubs_of(centers, source);
  const std::size_t k = r.hubs.size();
  const std::size_t n = g.n;

  r.tables = bellman_ford_hop_multi(ctx, g, std::span<const Vertex>(r.hubs), h);

  DistMatrix<W> hmat(r.hubs);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) hmat.at(i, j) = r.tables[i].dist[static_cast<std::size_t>(r.hubs[j])];
  }
  if (keep_trace) r.trace.emplace();
  r.closure = apsp_repeated_squaring(ctx, std::move(hmat), r.trace ? &*r.trace : nullptr);

  const std::size_t si =
      static_cast<std::size_t>(std::lower_bound(r.hubs.begin(), r.hubs.end(), source) - r.hubs.begin());
  auto value = [&](std::size_t t, std::uint32_t x) -> D { return r.closure.at(si, x) + r.tables[x].dist[t]; };

  std::vector<std::uint32_t> winners(n, kNoCandidate);
  ctx.add_work(static_cast<std::uint64_t>(n) * k);
  ctx.note_step();
  bool done = false;
  if constexpr (!Ctx::is_parametric) {
    if (ctx.direct_loops) {
      ctx.counters.comparisons += n * (k > 0 ? k - 1 : 0);
      ctx.counters.comparison_rounds += ceil_log2(k);
      for (std::size_t t = 0; t < n; ++t) {
        D best = D::inf();
        for (std::uint32_t x = 0; x < k; ++x) {
          D cand = value(t, x);
          if (cand.infinite) continue;
          if (winners[t] == kNoCandidate || compare_concrete(cand, best) == Ordering::Less) {
            best = std::move(cand);
            winners[t] = x;
          }
        }
      }
      done = true;
    }
  }
  if (!done) {
    CandidateGroups groups;
    groups.ids.reserve(n * k);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::uint32_t x = 0; x < k; ++x) {
        if (r.closure.at(si, x).finite() && r.tables[x].dist[t].finite()) groups.push(x);
      }
      groups.close_group();
    }
    winners = tournament_min(ctx, std::move(groups), value,
                             [](std::size_t, std::uint32_t a, std::uint32_t b) { return a < b; });
  }

  r.delta.assign(n, D::inf());
  r.cert.assign(n, -1);
  for (std::size_t t = 0; t < n; ++t) {
    if (winners[t] == kNoCandidate) continue;
    r.delta[t] = value(t, winners[t]);
    r.cert[t] = static_cast<std::int32_t>(winners[t]);
  }
  return r;
}

namespace detail {

template <class W>
void closure_walk(const SsspResult<W>& r, std::size_t level, std::size_t i, std::size_t j, Walk& out) {
  const std::size_t k = r.hubs.size();
  if (level > 0) {
    const std::uint32_t via = r.trace->via[level - 1][i * k + j];
    if (via == 0) {
      closure_walk(r, level - 1, i, j, out);
    } else {
      closure_walk(r, level - 1, i, via - 1, out);
      closure_walk(r, level - 1, via - 1, j, out);
    }
    return;
  }
  auto seg = extract_walk(r.tables[i], r.hubs[j]);
  if (!seg) throw std::logic_error("closure entry has no walk");
  out.vertices.insert(out.vertices.end(), seg->vertices.begin() + 1, seg->vertices.end());
  out.edges.insert(out.edges.end(), seg->edges.begin(), seg->edges.end());
}

}  // namespace detail

/// The source-to-t walk realizing delta[t]. Needs a result computed with
/// keep_trace; nullopt for unreached t.
template <class W>
std::optional<Walk> reconstruct_walk(const SsspResult<W>& r, Vertex t) {
  if (!r.trace) throw std::logic_error("reconstruct_walk needs a trace");
  const std::int32_t x = r.cert.at(static_cast<std::size_t>(t));
  if (x < 0) return std::nullopt;
  const std::size_t si =
      static_cast<std::size_t>(std::lower_bound(r.hubs.begin(), r.hubs.end(), r.source) - r.hubs.begin());
  Walk w;
  w.vertices.push_back(r.source);
  detail::closure_walk(r, r.trace->via.size(), si, static_cast<std::size_t>(x), w);
  auto tail = extract_walk(r.tables[static_cast<std::size_t>(x)], t);
  w.vertices.insert(w.vertices.end(), tail->vertices.begin() + 1, tail->vertices.end());
  w.edges.insert(w.edges.end(), tail->edges.begin(), tail->edges.end());
  return w;
}

/// New vertex n with zero-weight edges to every original vertex.
template <class W>
Digraph<W> add_super_source(const Digraph<W>& g) {
  Digraph<W> out = g;
  const auto s = static_cast<Vertex>(g.n);
  out.n = g.n + 1;
  for (std::size_t v = 0; v < g.n; ++v) out.edges.push_back({s, static_cast<Vertex>(v), W{}});
  return out;
}

/// Checks p(u) + w(u, v) >= p(v) on every edge, all comparisons in one batch.
/// Returns the lowest-index violated edge, or nullopt if p is a valid potential.
template <class Ctx>
std::optional<std::size_t> check_potential(Ctx& ctx, const Digraph<typename Ctx::weight_type>& g,
                                           const std::vector<Dist<typename Ctx::weight_type>>& p) {
  using D = Dist<typename Ctx::weight_type>;
  if (p.size() != g.n) throw std::invalid_argument("potential size mismatch");
  auto lhs = [&](std::size_t i) {
    const auto& e = g.edges[i];
    return p[static_cast<std::size_t>(e.src)] + D::of(e.weight);
  };
  ctx.add_work(g.m());
  ctx.note_step();
  ctx.batch_begin();
  for (std::size_t i = 0; i < g.m(); ++i) ctx.submit(lhs(i), p[static_cast<std::size_t>(g.edges[i].dst)]);
  ctx.batch_end();
  std::optional<std::size_t> violated;
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (ctx.decide(lhs(i), p[static_cast<std::size_t>(g.edges[i].dst)]) == Ordering::Less && !violated) {
      violated = i;
    }
  }
  return violated;
}

struct CenterPolicy {
  CenterMode mode = CenterMode::Full;
  std::uint64_t seed = 0;
  double c = 1.0;
  std::vector<Vertex> members;  // Explicit mode only

  static CenterPolicy randomized(std::uint64_t seed, double c = 1.0) { return {CenterMode::Randomized, seed, c, {}}; }
  static CenterPolicy greedy() { return {CenterMode::Greedy, 0, 1.0, {}}; }
  static CenterPolicy full() { return {CenterMode::Full, 0, 1.0, {}}; }
  static CenterPolicy fixed(std::vector<Vertex> m) { return {CenterMode::Explicit, 0, 1.0, std::move(m)}; }
};

/// Greedy centers over the canonical floor(h/2)-edge paths of g, computed
/// with all-pairs hop-limited Bellman-Ford through ctx.
template <class Ctx>
CenterSet greedy_centers(Ctx& ctx, const Digraph<typename Ctx::weight_type>& g, std::size_t h) {
  const std::size_t half = h / 2;
  std::vector<HopTable<typename Ctx::weight_type>> tables;
  if (half > 0) {
    std::vector<Vertex> all(g.n);
    for (std::size_t v = 0; v < g.n; ++v) all[v] = static_cast<Vertex>(v);
    tables = bellman_ford_hop_multi(ctx, g, std::span<const Vertex>(all), half);
  }
  return greedy_hitting_set(build_path_family(tables, g.n, half), g.n);
}

template <class W>
struct NegCycleVerdict {
  bool has_negative_cycle = false;
  std::optional<std::size_t> violated_edge;  // index into the graph with super source
  std::vector<Dist<W>> potential;            // over original vertices, set when no cycle
  CenterSet centers;
  int sample_attempts = 0;
  bool fell_back = false;
};

/// Runs the pipeline from a super source added to g and returns its potential
/// check. A "no negative cycle" verdict always carries a valid potential.
template <class Ctx>
NegCycleVerdict<typename Ctx::weight_type> detect_with_centers(Ctx& ctx, const Digraph<typename Ctx::weight_type>& gs,
                                                               const CenterSet& centers, std::size_t h) {
  using W = typename Ctx::weight_type;
  NegCycleVerdict<W> v;
  v.centers = centers;
  const auto source = static_cast<Vertex>(gs.n - 1);
  auto r = hitting_set_sssp(ctx, gs, source, centers.members, h);
  v.violated_edge = check_potential(ctx, gs, r.delta);
  v.has_negative_cycle = v.violated_edge.has_value();
  if (!v.has_negative_cycle) {
    v.potential.assign(r.delta.begin(), r.delta.end() - 1);
  }
  return v;
}

/// Negative cycle detection on g. Randomized mode samples once, before any
/// weight comparison; h is clamped to the augmented vertex count.
template <class Ctx>
NegCycleVerdict<typename Ctx::weight_type> detect_negative_cycle(Ctx& ctx,
                                                                 const Digraph<typename Ctx::weight_type>& g,
                                                                 std::size_t h, const CenterPolicy& policy) {
  const auto gs = add_super_source(g);
  if (h < 1 || h > gs.n) throw std::invalid_argument("hop bound must lie in [1, n + 1]");
  switch (policy.mode) {
    case CenterMode::Randomized: {
      std::mt19937_64 rng(policy.seed);
      const SampleOutcome s = sample_with_fallback(gs.n, h, policy.c, rng);
      auto v = detect_with_centers(ctx, gs, s.centers, h);
      v.sample_attempts = s.attempts;
      v.fell_back = s.fell_back;
      return v;
    }
    case CenterMode::Greedy:
      return detect_with_centers(ctx, gs, greedy_centers(ctx, gs, h), h);
    case CenterMode::Explicit: {
      CenterSet c;
      c.members = policy.members;
      std::sort(c.members.begin(), c.members.end());
      c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
      c.size_bound = c.members.size();
      return detect_with_centers(ctx, gs, c, h);
    }
    case CenterMode::Full:
      break;
  }
  return detect_with_centers(ctx, gs, all_vertices(gs.n), h);
}

}  // namespace ratiocycle
