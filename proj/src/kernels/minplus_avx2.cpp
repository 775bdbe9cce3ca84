// Compiled with -mavx2 on x86-64; only called after a runtime CPU check.

#include "ratiocycle/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace ratiocycle::kernels::avx2 {

bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n) {
  if (a == kInf) return false;
  const __m256i va = _mm256_set1_epi64x(a);
  const __m256i vsat = _mm256_set1_epi64x(kSaturate);
  const __m256i vinf = _mm256_set1_epi64x(kInf);
  __m256i any = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + j));
    __m256i s = _mm256_add_epi64(va, vb);
    s = _mm256_blendv_epi8(s, vinf, _mm256_cmpgt_epi64(s, vsat));
    const __m256i lt = _mm256_cmpgt_epi64(vc, s);
    any = _mm256_or_si256(any, lt);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + j), _mm256_blendv_epi8(vc, s, lt));
  }
  bool changed = !_mm256_testz_si256(any, any);
  for (; j < n; ++j) {
    std::int64_t s = a + b[j];
    if (s > kSaturate) s = kInf;
    if (s < c[j]) {
      c[j] = s;
      changed = true;
    }
  }
  return changed;
}

}  // namespace ratiocycle::kernels::avx2

#else

namespace ratiocycle::kernels::avx2 {
bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n) {
  return scalar::minplus_row_update(a, b, c, n);
}
}  // namespace ratiocycle::kernels::avx2

#endif
