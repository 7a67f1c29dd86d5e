#pragma once

// Batched predimension evaluation over subsets of a small free point set.
//
// Fix a base set F and up to 32 free points. For Y a subset of the free
// points (as a bitmask),
//
//   value(Y) = base + |Y| - sum_i max(0, offset_i + |mask_i & Y|)
//
// where each line contributes mask_i (its free points) and
// offset_i = |line ∩ F| - 2. With base = |F| minus the nullity already present
// in F, value(Y) is δ(F ∪ Y).
//
// The scalar kernel is the reference; vector variants must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace planeforge::kernels {

struct OffsetLines {
  std::int32_t base = 0;
  std::vector<std::uint32_t> masks;
  std::vector<std::int32_t> offsets;
};

using RangeFn = void (*)(const OffsetLines&, std::uint32_t first, std::uint32_t count, std::int32_t* out);
using ListFn = void (*)(const OffsetLines&, const std::uint32_t* subsets, std::size_t count, std::int32_t* out);

struct Kernel {
  const char* name;
  RangeFn range;  // out[k] = value(first + k)
  ListFn list;    // out[k] = value(subsets[k])
};

const Kernel& scalar_kernel();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const Kernel* avx2_kernel();
const Kernel* neon_kernel();

/// Chosen once per process: PLANEFORGE_KERNEL=scalar|avx2|neon forces a
/// variant, otherwise the widest supported one.
const Kernel& active_kernel();

std::int32_t evaluate_one(const OffsetLines& lines, std::uint32_t subset);

}  // namespace planeforge::kernels
