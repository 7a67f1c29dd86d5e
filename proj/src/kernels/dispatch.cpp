#include <cstdlib>
#include <string_view>

#include "planeforge/kernels/delta_kernel.hpp"

namespace planeforge::kernels {

#if defined(PLANEFORGE_HAVE_AVX2_TU)
namespace avx2 {
void range(const OffsetLines&, std::uint32_t, std::uint32_t, std::int32_t*);
void list(const OffsetLines&, const std::uint32_t*, std::size_t, std::int32_t*);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void range(const OffsetLines&, std::uint32_t, std::uint32_t, std::int32_t*);
void list(const OffsetLines&, const std::uint32_t*, std::size_t, std::int32_t*);
}  // namespace neon
#endif

const Kernel* avx2_kernel() {
#if defined(PLANEFORGE_HAVE_AVX2_TU)
  static const Kernel k{"avx2", &avx2::range, &avx2::list};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &k : nullptr;
#else
  return nullptr;
#endif
}

const Kernel* neon_kernel() {
#if defined(__aarch64__)
  static const Kernel k{"neon", &neon::range, &neon::list};
  return &k;
#else
  return nullptr;
#endif
}

const Kernel& active_kernel() {
  static const Kernel& chosen = []() -> const Kernel& {
    const char* env = std::getenv("PLANEFORGE_KERNEL");
    std::string_view want = env ? env : "auto";
    if (want == "scalar") return scalar_kernel();
    if (want == "avx2" && avx2_kernel()) return *avx2_kernel();
    if (want == "neon" && neon_kernel()) return *neon_kernel();
    if (auto* k = avx2_kernel()) return *k;
    if (auto* k = neon_kernel()) return *k;
    return scalar_kernel();
  }();
  return chosen;
}

}  // namespace planeforge::kernels
