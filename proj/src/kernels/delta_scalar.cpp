#include <bit>

#include "planeforge/kernels/delta_kernel.hpp"

namespace planeforge::kernels {

std::int32_t evaluate_one(const OffsetLines& lines, std::uint32_t subset) {
  std::int32_t v = lines.base + std::popcount(subset);
  for (std::size_t i = 0; i < lines.masks.size(); ++i) {
    std::int32_t t = lines.offsets[i] + std::popcount(lines.masks[i] & subset);
    if (t > 0) v -= t;
  }
  return v;
}

namespace {

void range_scalar(const OffsetLines& lines, std::uint32_t first, std::uint32_t count, std::int32_t* out) {
  for (std::uint32_t k = 0; k < count; ++k) out[k] = evaluate_one(lines, first + k);
}

void list_scalar(const OffsetLines& lines, const std::uint32_t* subsets, std::size_t count, std::int32_t* out) {
  for (std::size_t k = 0; k < count; ++k) out[k] = evaluate_one(lines, subsets[k]);
}

}  // namespace

const Kernel& scalar_kernel() {
  static const Kernel k{"scalar", &range_scalar, &list_scalar};
  return k;
}

}  // namespace planeforge::kernels
