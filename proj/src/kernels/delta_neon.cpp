// aarch64 only; NEON is part of the base ISA there.
#include <arm_neon.h>

#include "planeforge/kernels/delta_kernel.hpp"

namespace planeforge::kernels::neon {
namespace {

inline uint32x4_t popcount_u32(uint32x4_t v) {
  uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u32(v));
  return vpaddlq_u16(vpaddlq_u8(bytes));
}

inline int32x4_t evaluate4(const OffsetLines& lines, uint32x4_t y) {
  int32x4_t v = vaddq_s32(vdupq_n_s32(lines.base), vreinterpretq_s32_u32(popcount_u32(y)));
  const int32x4_t zero = vdupq_n_s32(0);
  for (std::size_t i = 0; i < lines.masks.size(); ++i) {
    uint32x4_t hit = vandq_u32(vdupq_n_u32(lines.masks[i]), y);
    int32x4_t t = vaddq_s32(vdupq_n_s32(lines.offsets[i]), vreinterpretq_s32_u32(popcount_u32(hit)));
    v = vsubq_s32(v, vmaxq_s32(t, zero));
  }
  return v;
}

}  // namespace

void range(const OffsetLines& lines, std::uint32_t first, std::uint32_t count, std::int32_t* out) {
  const uint32_t lanes[4] = {0, 1, 2, 3};
  const uint32x4_t step = vld1q_u32(lanes);
  std::uint32_t k = 0;
  for (; k + 4 <= count; k += 4)
    vst1q_s32(out + k, evaluate4(lines, vaddq_u32(vdupq_n_u32(first + k), step)));
  for (; k < count; ++k) out[k] = evaluate_one(lines, first + k);
}

void list(const OffsetLines& lines, const std::uint32_t* subsets, std::size_t count, std::int32_t* out) {
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) vst1q_s32(out + k, evaluate4(lines, vld1q_u32(subsets + k)));
  for (; k < count; ++k) out[k] = evaluate_one(lines, subsets[k]);
}

}  // namespace planeforge::kernels::neon
