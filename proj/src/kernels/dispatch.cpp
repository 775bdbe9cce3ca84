#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ratiocycle/kernels.hpp"

namespace ratiocycle::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("RATIOCYCLE_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == to_string(isa) && isa_supported(isa)) return isa;
    }
  }
  return detected_isa();
}

Isa& active() {
  static Isa isa = initial_isa();
  return isa;
}

}  // namespace

Isa active_isa() { return active(); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("ISA '" + std::string(to_string(isa)) + "' not supported on this machine");
  }
  active() = isa;
}

RowUpdateFn row_update_for(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return &avx2::minplus_row_update;
    case Isa::Neon: return &neon::minplus_row_update;
    case Isa::Scalar: break;
  }
  return &scalar::minplus_row_update;
}

bool minplus_row_update(std::int64_t a, std::span<const std::int64_t> b, std::span<std::int64_t> c) {
  if (b.size() != c.size()) throw std::invalid_argument("row length mismatch");
  return row_update_for(active_isa())(a, b.data(), c.data(), c.size());
}

bool minplus_accumulate(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                        std::span<std::int64_t> c, std::size_t k, Isa isa) {
  if (a.size() != k * k || b.size() != k * k || c.size() != k * k) {
    throw std::invalid_argument("matrix size mismatch");
  }
  const RowUpdateFn update = row_update_for(isa);
  bool changed = false;
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t* crow = c.data() + i * k;
    for (std::size_t l = 0; l < k; ++l) {
      changed |= update(a[i * k + l], b.data() + l * k, crow, k);
    }
  }
  return changed;
}

bool minplus_accumulate(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                        std::span<std::int64_t> c, std::size_t k) {
  return minplus_accumulate(a, b, c, k, active_isa());
}

void floyd_warshall(std::span<std::int64_t> d, std::size_t n, Isa isa) {
  if (d.size() != n * n) throw std::invalid_argument("matrix size mismatch");
  const RowUpdateFn update = row_update_for(isa);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t* krow = d.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      update(d[i * n + k], krow, d.data() + i * n, n);
    }
  }
}

void floyd_warshall(std::span<std::int64_t> d, std::size_t n) { floyd_warshall(d, n, active_isa()); }

}  // namespace ratiocycle::kernels
