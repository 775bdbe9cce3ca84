#pragma once

// Dense int64 min-plus kernels with scalar reference implementations and SIMD
// variants (AVX2 on x86-64, NEON on AArch64) selected at runtime.
//
// Encoding: +infinity is kInf. Finite inputs must satisfy |x| <= kMaxFinite.
// A sum a + b is saturated to kInf whenever it exceeds kSaturate, so
// inf + finite and inf + inf stay kInf and finite + finite is exact. All
// variants implement exactly this formula and are bit-identical.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ratiocycle::kernels {

inline constexpr std::int64_t kInf = std::int64_t{1} << 61;
inline constexpr std::int64_t kSaturate = std::int64_t{1} << 60;
inline constexpr std::int64_t kMaxFinite = std::int64_t{1} << 58;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Best ISA supported by this CPU and build.
Isa detected_isa();
bool isa_supported(Isa isa);
/// ISA used by the dispatching entry points. Defaults to detected_isa(),
/// overridable with RATIOCYCLE_ISA=scalar|avx2|neon in the environment.
Isa active_isa();
/// Throws std::invalid_argument if the ISA is not supported here.
void set_active_isa(Isa isa);

/// c[j] = min(c[j], sat(a + b[j])) for all j. Returns true if any c[j]
/// decreased. b and c may alias exactly (same span), never partially.
using RowUpdateFn = bool (*)(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n);

namespace scalar {
bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n);
}
namespace avx2 {
bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n);
}
namespace neon {
bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n);
}

RowUpdateFn row_update_for(Isa isa);

bool minplus_row_update(std::int64_t a, std::span<const std::int64_t> b, std::span<std::int64_t> c);

/// C = min(C, A (x) B) for row-major k x k matrices. Returns true if C changed.
bool minplus_accumulate(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                        std::span<std::int64_t> c, std::size_t k, Isa isa);
bool minplus_accumulate(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                        std::span<std::int64_t> c, std::size_t k);

/// In-place Floyd-Warshall closure of a row-major n x n distance matrix.
void floyd_warshall(std::span<std::int64_t> d, std::size_t n, Isa isa);
void floyd_warshall(std::span<std::int64_t> d, std::size_t n);

inline bool encodable(std::int64_t x) { return x >= -kMaxFinite && x <= kMaxFinite; }

}  // namespace ratiocycle::kernels
