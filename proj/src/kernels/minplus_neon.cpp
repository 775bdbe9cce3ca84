#include "ratiocycle/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace ratiocycle::kernels::neon {

bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n) {
  if (a == kInf) return false;
  const int64x2_t va = vdupq_n_s64(a);
  const int64x2_t vsat = vdupq_n_s64(kSaturate);
  const int64x2_t vinf = vdupq_n_s64(kInf);
  uint64x2_t any = vdupq_n_u64(0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const int64x2_t vb = vld1q_s64(b + j);
    const int64x2_t vc = vld1q_s64(c + j);
    int64x2_t s = vaddq_s64(va, vb);
    s = vbslq_s64(vcgtq_s64(s, vsat), vinf, s);
    const uint64x2_t lt = vcgtq_s64(vc, s);
    any = vorrq_u64(any, lt);
    vst1q_s64(c + j, vbslq_s64(lt, s, vc));
  }
  bool changed = (vgetq_lane_u64(any, 0) | vgetq_lane_u64(any, 1)) != 0;
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

}  // namespace ratiocycle::kernels::neon

#else

namespace ratiocycle::kernels::neon {
bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n) {
  return scalar::minplus_row_update(a, b, c, n);
}
}  // namespace ratiocycle::kernels::neon

#endif
