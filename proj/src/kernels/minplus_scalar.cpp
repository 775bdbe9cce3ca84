#include "ratiocycle/kernels.hpp"

namespace ratiocycle::kernels::scalar {

bool minplus_row_update(std::int64_t a, const std::int64_t* b, std::int64_t* c, std::size_t n) {
  if (a == kInf) return false;
  bool changed = false;
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t s = a + b[j];
    if (s > kSaturate) s = kInf;
    if (s < c[j]) {
      c[j] = s;
      changed = true;
    }
  }
  return changed;
}

}  // namespace ratiocycle::kernels::scalar
