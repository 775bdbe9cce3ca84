#include "ratiocycle/hitting_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ratiocycle {

std::string_view to_string(CenterMode mode) {
  switch (mode) {
    case CenterMode::Randomized: return "randomized";
    case CenterMode::Greedy: return "greedy";
    case CenterMode::Explicit: return "explicit";
    case CenterMode::Full: return "full";
  }
  return "?";
}

double ln_upper(std::size_t n) {
  if (n < 2) return 0.0;
  return std::nextafter(std::log(static_cast<double>(n)), std::numeric_limits<double>::infinity());
}

double sampling_probability(std::size_t n, std::size_t h, double c) {
  if (n < 2) return 1.0;
  if (h == 0) throw std::invalid_argument("hop bound must be at least 1");
  return std::min(3.0 * c * ln_upper(n) / static_cast<double>(h), 1.0);
}

double sampling_threshold(std::size_t n, std::size_t h, double c) {
  if (h == 0) throw std::invalid_argument("hop bound must be at least 1");
  if (n < 2) return static_cast<double>(n);
  return 9.0 * c * static_cast<double>(n) * ln_upper(n) / static_cast<double>(h);
}

std::variant<CenterSet, TooLarge> sample_centers(std::size_t n, std::size_t h, double c, std::mt19937_64& rng) {
  if (c < 1.0) throw std::invalid_argument("oversampling constant must be at least 1");
  const double p = sampling_probability(n, h, c);
  const double threshold = sampling_threshold(n, h, c);
  CenterSet set;
  set.mode = CenterMode::Randomized;
  set.size_bound = static_cast<std::size_t>(std::ceil(threshold));
  std::bernoulli_distribution coin(p);
  for (std::size_t v = 0; v < n; ++v) {
    if (p >= 1.0 || coin(rng)) set.members.push_back(static_cast<Vertex>(v));
  }
  if (static_cast<double>(set.members.size()) > threshold) return TooLarge{set.members.size(), set.size_bound};
  return set;
}

CenterSet greedy_hitting_set(const PathFamily& family, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> containing(n);
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    if (family.sets[i].empty()) throw std::invalid_argument("greedy hitting set needs nonempty sets");
    for (Vertex v : family.sets[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::out_of_range("family vertex outside universe");
      containing[static_cast<std::size_t>(v)].push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<std::size_t> count(n);
  for (std::size_t v = 0; v < n; ++v) count[v] = containing[v].size();
  std::vector<char> hit(family.sets.size(), 0);
  std::size_t remaining = family.sets.size();

  CenterSet out;
  out.mode = CenterMode::Greedy;
  out.size_bound = greedy_size_bound(family, n);
  while (remaining > 0) {
    const auto best = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    out.members.push_back(static_cast<Vertex>(best));
    for (std::uint32_t s : containing[best]) {
      if (hit[s]) continue;
      hit[s] = 1;
      --remaining;
      for (Vertex v : family.sets[s]) --count[static_cast<std::size_t>(v)];
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::size_t greedy_size_bound(const PathFamily& family, std::size_t n) {
  if (family.sets.empty()) return 0;
  std::size_t q = std::numeric_limits<std::size_t>::max();
  for (const auto& s : family.sets) q = std::min(q, s.size());
  const double k = static_cast<double>(family.sets.size());
  return static_cast<std::size_t>(std::ceil(static_cast<double>(n) / static_cast<double>(q) * (std::log(k) + 1.0)));
}

bool hits_all(const PathFamily& family, const std::vector<Vertex>& centers) {
  std::vector<Vertex> sorted = centers;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& s : family.sets) {
    const bool hit = std::any_of(s.begin(), s.end(),
                                 [&](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); });
    if (!hit) return false;
  }
  return true;
}

CenterSet all_vertices(std::size_t n) {
  CenterSet set;
  set.mode = CenterMode::Full;
  set.size_bound = n;
  for (std::size_t v = 0; v < n; ++v) set.members.push_back(static_cast<Vertex>(v));
  return set;
}

SampleOutcome sample_with_fallback(std::size_t n, std::size_t h, double c, std::mt19937_64& rng) {
  SampleOutcome out;
  for (out.attempts = 1; out.attempts <= kSampleAttempts; ++out.attempts) {
    auto drawn = sample_centers(n, h, c, rng);
    if (auto* set = std::get_if<CenterSet>(&drawn)) {
      out.centers = std::move(*set);
      return out;
    }
  }
  out.attempts = kSampleAttempts;
  out.fell_back = true;
  out.centers = all_vertices(n);
  return out;
}

}  // namespace ratiocycle
