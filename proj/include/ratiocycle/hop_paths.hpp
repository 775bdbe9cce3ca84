#pragma once

// Hop-limited Bellman-Ford with lexicographic tie-breaking, and all-pairs
// shortest paths by repeated min-plus squaring. Both are written against a
// comparison context and run concretely or generically at lambda*.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "ratiocycle/comparison.hpp"
#include "ratiocycle/graph.hpp"
#include "ratiocycle/kernels.hpp"
#include "ratiocycle/tournament.hpp"

namespace ratiocycle {

/// How vertex v's path changed in one Bellman-Ford iteration. edge < 0 means
/// the path from the previous iteration was kept.
struct HopStep {
  Vertex pred = kNoVertex;
  std::int32_t edge = -1;
};

/// Result of h-hop Bellman-Ford from one source. layers[i][v] records
/// iteration i (1-based; layers[0] is empty), which is enough to rebuild the
/// chosen path of every vertex after every iteration.
template <class W>
struct HopTable {
  Vertex source = 0;
  std::size_t h = 0;
  std::vector<Dist<W>> dist;
  std::vector<std::uint32_t> hops;
  std::vector<std::vector<HopStep>> layers;
};

struct Walk {
  std::vector<Vertex> vertices;    // source first, target last
  std::vector<std::size_t> edges;  // edge indices, vertices.size() - 1 of them
};

namespace detail {

template <class W>
Walk walk_at_layer(const HopTable<W>& t, std::size_t layer, Vertex v) {
  Walk w;
  w.vertices.push_back(v);
  while (layer > 0) {
    const HopStep& s = t.layers[layer][static_cast<std::size_t>(v)];
    if (s.edge >= 0) {
      w.edges.push_back(static_cast<std::size_t>(s.edge));
      v = s.pred;
      w.vertices.push_back(v);
    }
    --layer;
  }
  std::reverse(w.vertices.begin(), w.vertices.end());
  std::reverse(w.edges.begin(), w.edges.end());
  return w;
}

template <class W>
struct InEdges {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> ids;  // edge indices grouped by target, ascending

  explicit InEdges(const Digraph<W>& g) : offsets(g.n + 1, 0), ids(g.m()) {
    for (const auto& e : g.edges) ++offsets[static_cast<std::size_t>(e.dst) + 1];
    for (std::size_t v = 0; v < g.n; ++v) offsets[v + 1] += offsets[v];
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < g.m(); ++i) ids[fill[static_cast<std::size_t>(g.edges[i].dst)]++] = static_cast<std::uint32_t>(i);
  }
};

}  // namespace detail

/// Walk (vertices and edges) of the chosen path to t, or nullopt if t is
/// unreached. The walk has hops[t] edges and weight dist[t]. It is a simple
/// path unless a negative cycle is reachable within h hops.
template <class W>
std::optional<Walk> extract_walk(const HopTable<W>& table, Vertex t) {
  if (t < 0 || static_cast<std::size_t>(t) >= table.dist.size()) throw std::out_of_range("vertex id");
  if (table.dist[static_cast<std::size_t>(t)].infinite) return std::nullopt;
  return detail::walk_at_layer(table, table.h, t);
}

template <class W>
std::optional<std::vector<Vertex>> extract_path(const HopTable<W>& table, Vertex t) {
  auto w = extract_walk(table, t);
  if (!w) return std::nullopt;
  return std::move(w->vertices);
}

/// h iterations of Bellman-Ford from every source, in lockstep: the
/// comparisons of all sources in one tournament round form a single batch.
/// Ties in weight go to the lexicographically smaller vertex sequence, then to
/// the lower candidate index (kept path first, then in-edges by index).
template <class Ctx>
std::vector<HopTable<typename Ctx::weight_type>> bellman_ford_hop_multi(
    Ctx& ctx, const Digraph<typename Ctx::weight_type>& g, std::span<const Vertex> sources, std::size_t h) {
  using W = typename Ctx::weight_type;
  using D = Dist<W>;
  const std::size_t n = g.n;
  if (h < 1) throw std::invalid_argument("hop bound must be at least 1");
  const detail::InEdges<W> in(g);

  std::vector<HopTable<W>> tables(sources.size());
  std::vector<std::vector<D>> prev(sources.size(), std::vector<D>(n));
  std::vector<std::vector<std::uint32_t>> hops(sources.size(), std::vector<std::uint32_t>(n, 0));
  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (sources[s] < 0 || static_cast<std::size_t>(sources[s]) >= n) throw std::out_of_range("source id");
    tables[s].source = sources[s];
    tables[s].h = h;
    tables[s].layers.resize(1);
    prev[s][static_cast<std::size_t>(sources[s])] = D::of(W{});
  }

  std::size_t max_cands = 1;
  for (std::size_t v = 0; v < n; ++v) max_cands = std::max<std::size_t>(max_cands, in.offsets[v + 1] - in.offsets[v] + 1);

  for (std::size_t it = 1; it <= h; ++it) {
    auto candidate = [&](std::size_t s, std::size_t v, std::uint32_t id) -> D {
      if (id == 0) return prev[s][v];
      const auto& e = g.edges[in.ids[in.offsets[v] + id - 1]];
      return prev[s][static_cast<std::size_t>(e.src)] + D::of(e.weight);
    };
    auto path_of = [&](std::size_t s, std::size_t v, std::uint32_t id) {
      if (id == 0) return detail::walk_at_layer(tables[s], it - 1, static_cast<Vertex>(v)).vertices;
      const auto& e = g.edges[in.ids[in.offsets[v] + id - 1]];
      auto p = detail::walk_at_layer(tables[s], it - 1, e.src).vertices;
      p.push_back(static_cast<Vertex>(v));
      return p;
    };
    auto prefer = [&](std::size_t s, std::size_t v, std::uint32_t x, std::uint32_t y) {
      const auto px = path_of(s, v, x);
      const auto py = path_of(s, v, y);
      if (px != py) return std::lexicographical_compare(px.begin(), px.end(), py.begin(), py.end());
      return x < y;
    };

    std::vector<std::uint32_t> winner(sources.size() * n, 0);
    std::uint64_t relaxations = 0;
    bool direct = false;
    if constexpr (!Ctx::is_parametric) direct = ctx.direct_loops;

    if constexpr (!Ctx::is_parametric) {
      if (direct) {
        std::uint64_t comparisons = 0;
        for (std::size_t s = 0; s < sources.size(); ++s) {
          for (std::size_t v = 0; v < n; ++v) {
            std::uint32_t best = 0;
            D best_val = prev[s][v];
            const std::uint32_t deg = in.offsets[v + 1] - in.offsets[v];
            for (std::uint32_t id = 1; id <= deg; ++id) {
              const auto& e = g.edges[in.ids[in.offsets[v] + id - 1]];
              if (prev[s][static_cast<std::size_t>(e.src)].infinite) continue;
              ++relaxations;
              ++comparisons;
              D val = candidate(s, v, id);
              const Ordering o = compare_concrete(val, best_val);
              if (o == Ordering::Less || (o == Ordering::Equal && prefer(s, v, id, best))) {
                best = id;
                best_val = std::move(val);
              }
            }
            winner[s * n + v] = best;
          }
        }
        ctx.counters.comparisons += comparisons;
        ctx.counters.comparison_rounds += ceil_log2(max_cands);
      }
    }
    if (!direct) {
      CandidateGroups groups;
      groups.ids.reserve(sources.size() * (n + g.m()));
      for (std::size_t s = 0; s < sources.size(); ++s) {
        for (std::size_t v = 0; v < n; ++v) {
          groups.push(0);
          const std::uint32_t deg = in.offsets[v + 1] - in.offsets[v];
          for (std::uint32_t id = 1; id <= deg; ++id) {
            const auto& e = g.edges[in.ids[in.offsets[v] + id - 1]];
            if (prev[s][static_cast<std::size_t>(e.src)].infinite) continue;
            groups.push(id);
            ++relaxations;
          }
          groups.close_group();
        }
      }
      winner = tournament_min(
          ctx, std::move(groups),
          [&](std::size_t grp, std::uint32_t id) { return candidate(grp / n, grp % n, id); },
          [&](std::size_t grp, std::uint32_t x, std::uint32_t y) { return prefer(grp / n, grp % n, x, y); });
    }
    ctx.add_work(relaxations);
    ctx.note_step();

    std::vector<std::vector<D>> cur(sources.size());
    for (std::size_t s = 0; s < sources.size(); ++s) {
      auto& layer = tables[s].layers.emplace_back(n);
      cur[s].resize(n);
      std::vector<std::uint32_t> next_hops(n);
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t id = winner[s * n + v];
        cur[s][v] = candidate(s, v, id);
        if (id == 0) {
          next_hops[v] = hops[s][v];
        } else {
          const std::uint32_t e = in.ids[in.offsets[v] + id - 1];
          layer[v] = {g.edges[e].src, static_cast<std::int32_t>(e)};
          next_hops[v] = hops[s][static_cast<std::size_t>(g.edges[e].src)] + 1;
        }
      }
      hops[s] = std::move(next_hops);
    }
    prev = std::move(cur);
  }

  for (std::size_t s = 0; s < sources.size(); ++s) {
    tables[s].dist = std::move(prev[s]);
    tables[s].hops = std::move(hops[s]);
  }
  return tables;
}

template <class Ctx>
HopTable<typename Ctx::weight_type> bellman_ford_hop(Ctx& ctx, const Digraph<typename Ctx::weight_type>& g,
                                                    Vertex source, std::size_t h) {
  const Vertex src[1] = {source};
  return std::move(bellman_ford_hop_multi(ctx, g, std::span<const Vertex>(src, 1), h).front());
}

// ---------------------------------------------------------------------------

template <class W>
struct DistMatrix {
  std::vector<Vertex> order;  // matrix index -> vertex id
  std::vector<Dist<W>> entries;

  DistMatrix() = default;
  explicit DistMatrix(std::vector<Vertex> ord) : order(std::move(ord)), entries(order.size() * order.size()) {}

  std::size_t size() const { return order.size(); }
  Dist<W>& at(std::size_t i, std::size_t j) { return entries[i * order.size() + j]; }
  const Dist<W>& at(std::size_t i, std::size_t j) const { return entries[i * order.size() + j]; }
  friend bool operator==(const DistMatrix&, const DistMatrix&) = default;
};

/// Winners of every squaring of apsp_repeated_squaring: via[s][i*k+j] is 0
/// when entry (i,j) kept its previous value, else 1 + the intermediate index.
struct ClosureTrace {
  std::vector<std::vector<std::uint32_t>> via;
};

namespace detail {

inline std::optional<std::vector<std::int64_t>> encode(const std::vector<Dist<std::int64_t>>& xs) {
  std::vector<std::int64_t> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].infinite) {
      out[i] = kernels::kInf;
    } else {
      if (!kernels::encodable(xs[i].value)) return std::nullopt;
      out[i] = xs[i].value;
    }
  }
  return out;
}

inline void decode(std::span<const std::int64_t> xs, std::vector<Dist<std::int64_t>>& out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = xs[i] == kernels::kInf ? Dist<std::int64_t>::inf() : Dist<std::int64_t>::of(xs[i]);
  }
}

/// Fast int64 path: only valid while every finite sum stays encodable, which
/// holds when k * max|entry| <= kMaxFinite.
inline bool kernel_safe(const std::vector<std::int64_t>& enc, std::size_t k) {
  std::int64_t mx = 0;
  for (auto x : enc) {
    if (x != kernels::kInf) mx = std::max(mx, x < 0 ? -x : x);
  }
  return mx <= kernels::kMaxFinite / static_cast<std::int64_t>(2 * k + 2);
}

}  // namespace detail

/// C[i][j] = min_l A[i][l] + B[l][j]; ties go to the lowest l.
template <class Ctx>
DistMatrix<typename Ctx::weight_type> minplus_product(Ctx& ctx, const DistMatrix<typename Ctx::weight_type>& a,
                                                      const DistMatrix<typename Ctx::weight_type>& b) {
  using W = typename Ctx::weight_type;
  using D = Dist<W>;
  if (a.order != b.order) throw std::invalid_argument("min-plus operands must share the index order");
  const std::size_t k = a.size();
  DistMatrix<W> c(a.order);
  ctx.add_work(static_cast<std::uint64_t>(k) * k * k);
  ctx.note_step();

  if constexpr (!Ctx::is_parametric) {
    if (ctx.direct_loops) {
      ctx.counters.comparisons += k * k * (k > 0 ? k - 1 : 0);
      ctx.counters.comparison_rounds += ceil_log2(k);
      if constexpr (std::is_same_v<W, std::int64_t>) {
        auto ea = detail::encode(a.entries);
        auto eb = detail::encode(b.entries);
        if (ea && eb && detail::kernel_safe(*ea, k) && detail::kernel_safe(*eb, k)) {
          std::vector<std::int64_t> ec(k * k, kernels::kInf);
          kernels::minplus_accumulate(*ea, *eb, ec, k);
          detail::decode(ec, c.entries);
          return c;
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          D best = D::inf();
          for (std::size_t l = 0; l < k; ++l) {
            D cand = a.at(i, l) + b.at(l, j);
            if (compare_concrete(cand, best) == Ordering::Less) best = std::move(cand);
          }
          c.at(i, j) = std::move(best);
        }
      }
      return c;
    }
  }

  CandidateGroups groups;
  groups.ids.reserve(k * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a.at(i, l).finite() && b.at(l, j).finite()) groups.push(static_cast<std::uint32_t>(l));
      }
      groups.close_group();
    }
  }
  const auto winners = tournament_min(
      ctx, std::move(groups),
      [&](std::size_t g, std::uint32_t l) { return a.at(g / k, l) + b.at(l, g % k); },
      [](std::size_t, std::uint32_t x, std::uint32_t y) { return x < y; });
  for (std::size_t g = 0; g < k * k; ++g) {
    if (winners[g] != kNoCandidate) c.entries[g] = a.at(g / k, winners[g]) + b.at(winners[g], g % k);
  }
  return c;
}

/// Closure of M under min-plus squaring, M <- min(M, M (x) M), repeated
/// ceil(log2(k-1)) times or until a squaring changes nothing (a fixed point
/// of the squaring, so further squarings would return the same matrix).
/// Requires that M encodes no negative cycle for the result to be distances.
template <class Ctx>
DistMatrix<typename Ctx::weight_type> apsp_repeated_squaring(Ctx& ctx, DistMatrix<typename Ctx::weight_type> m,
                                                             ClosureTrace* trace = nullptr) {
  using W = typename Ctx::weight_type;
  using D = Dist<W>;
  const std::size_t k = m.size();
  const std::size_t squarings = k <= 2 ? 0 : ceil_log2(k - 1);

  for (std::size_t sq = 0; sq < squarings; ++sq) {
    ctx.add_work(static_cast<std::uint64_t>(k) * k * k);
    ctx.note_step();
    bool changed = false;
    std::vector<std::uint32_t> via(k * k, 0);
    bool done = false;

    if constexpr (!Ctx::is_parametric) {
      if (ctx.direct_loops) {
        ctx.counters.comparisons += k * k * k;
        ctx.counters.comparison_rounds += ceil_log2(k + 1);
        if constexpr (std::is_same_v<W, std::int64_t>) {
          auto enc = detail::encode(m.entries);
          if (trace == nullptr && enc && detail::kernel_safe(*enc, k)) {
            std::vector<std::int64_t> next = *enc;
            changed = kernels::minplus_accumulate(*enc, *enc, next, k);
            detail::decode(next, m.entries);
            done = true;
          }
        }
        if (!done) {
          DistMatrix<W> next = m;
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              for (std::size_t l = 0; l < k; ++l) {
                D cand = m.at(i, l) + m.at(l, j);
                if (compare_concrete(cand, next.at(i, j)) == Ordering::Less) {
                  next.at(i, j) = std::move(cand);
                  via[i * k + j] = static_cast<std::uint32_t>(l + 1);
                  changed = true;
                }
              }
            }
          }
          m = std::move(next);
          done = true;
        }
      }
    }

    if (!done) {
      CandidateGroups groups;
      groups.ids.reserve(k * k * (k + 1));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          groups.push(0);
          for (std::size_t l = 0; l < k; ++l) {
            if (m.at(i, l).finite() && m.at(l, j).finite()) groups.push(static_cast<std::uint32_t>(l + 1));
          }
          groups.close_group();
        }
      }
      auto value = [&](std::size_t g, std::uint32_t id) -> D {
        if (id == 0) return m.entries[g];
        return m.at(g / k, id - 1) + m.at(id - 1, g % k);
      };
      via = tournament_min(ctx, std::move(groups), value,
                           [](std::size_t, std::uint32_t x, std::uint32_t y) { return x < y; });
      DistMatrix<W> next(m.order);
      for (std::size_t g = 0; g < k * k; ++g) {
        next.entries[g] = value(g, via[g]);
        changed |= via[g] != 0;
      }
      m = std::move(next);
    }

    if (trace) trace->via.push_back(std::move(via));
    if (!changed) break;
  }
  return m;
}

/// Distance matrix of a digraph restricted to one-edge paths: 0 on the
/// diagonal (or the lightest self-loop if negative), lightest parallel edge
/// elsewhere. Order is 0..n-1.
template <class W>
DistMatrix<W> adjacency_matrix(const Digraph<W>& g) {
  std::vector<Vertex> ord(g.n);
  for (std::size_t v = 0; v < g.n; ++v) ord[v] = static_cast<Vertex>(v);
  DistMatrix<W> m(std::move(ord));
  for (std::size_t v = 0; v < g.n; ++v) m.at(v, v) = Dist<W>::of(W{});
  for (const auto& e : g.edges) {
    auto& cell = m.at(static_cast<std::size_t>(e.src), static_cast<std::size_t>(e.dst));
    const auto cand = Dist<W>::of(e.weight);
    if (compare_concrete(cand, cell) == Ordering::Less) cell = cand;
  }
  return m;
}

}  // namespace ratiocycle
