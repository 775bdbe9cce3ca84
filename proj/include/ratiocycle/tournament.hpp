#pragma once

// Batched tournament minimum over many independent candidate groups.
//
// Every round pairs up adjacent survivors of all groups; the comparisons of
// one round do not depend on each other and are issued as one batch. A group
// of s candidates therefore needs ceil(log2 s) rounds and all groups advance
// in lockstep.

#include <cstdint>
#include <limits>
#include <vector>

#include "ratiocycle/comparison.hpp"

namespace ratiocycle {

inline constexpr std::uint32_t kNoCandidate = std::numeric_limits<std::uint32_t>::max();

/// Candidate groups in CSR form: group g owns ids[offsets[g] .. offsets[g+1]).
struct CandidateGroups {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> ids;

  std::size_t groups() const { return offsets.size() - 1; }
  void push(std::uint32_t id) { ids.push_back(id); }
  void close_group() { offsets.push_back(static_cast<std::uint32_t>(ids.size())); }
};

inline std::size_t ceil_log2(std::size_t x) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

/// Returns the winning candidate id of every group (kNoCandidate for an
/// empty group). value(g, id) yields the candidate's weight; on Equal,
/// prefer(g, a, b) decides whether a beats b.
template <class Ctx, class ValueFn, class PreferFn>
std::vector<std::uint32_t> tournament_min(Ctx& ctx, CandidateGroups groups, ValueFn&& value, PreferFn&& prefer) {
  const std::size_t g_count = groups.groups();
  std::vector<std::uint32_t> size(g_count);
  for (std::size_t g = 0; g < g_count; ++g) size[g] = groups.offsets[g + 1] - groups.offsets[g];
  auto& ids = groups.ids;

  for (;;) {
    bool any = false;
    for (std::size_t g = 0; g < g_count && !any; ++g) any = size[g] >= 2;
    if (!any) break;

    ctx.batch_begin();
    for (std::size_t g = 0; g < g_count; ++g) {
      const std::uint32_t base = groups.offsets[g];
      for (std::uint32_t i = 0; i + 1 < size[g]; i += 2) {
        ctx.submit(value(g, ids[base + i]), value(g, ids[base + i + 1]));
      }
    }
    ctx.batch_end();

    for (std::size_t g = 0; g < g_count; ++g) {
      const std::uint32_t base = groups.offsets[g];
      const std::uint32_t s = size[g];
      if (s < 2) continue;
      std::uint32_t out = 0;
      for (std::uint32_t i = 0; i + 1 < s; i += 2) {
        const std::uint32_t x = ids[base + i];
        const std::uint32_t y = ids[base + i + 1];
        const Ordering o = ctx.decide(value(g, x), value(g, y));
        const bool x_wins = o == Ordering::Less || (o == Ordering::Equal && prefer(g, x, y));
        ids[base + out++] = x_wins ? x : y;
      }
      if (s % 2 == 1) ids[base + out++] = ids[base + s - 1];
      size[g] = out;
    }
  }

  std::vector<std::uint32_t> winners(g_count, kNoCandidate);
  for (std::size_t g = 0; g < g_count; ++g) {
    if (size[g] == 1) winners[g] = ids[groups.offsets[g]];
  }
  return winners;
}

}  // namespace ratiocycle
