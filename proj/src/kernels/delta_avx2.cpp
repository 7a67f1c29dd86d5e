// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "planeforge/kernels/delta_kernel.hpp"

namespace planeforge::kernels::avx2 {
namespace {

inline __m256i popcount_epi32(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nibble = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, nibble);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  __m256i pairs = _mm256_maddubs_epi16(bytes, _mm256_set1_epi8(1));
  return _mm256_madd_epi16(pairs, _mm256_set1_epi16(1));
}

inline __m256i evaluate8(const OffsetLines& lines, __m256i y) {
  __m256i v = _mm256_add_epi32(_mm256_set1_epi32(lines.base), popcount_epi32(y));
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t i = 0; i < lines.masks.size(); ++i) {
    __m256i m = _mm256_set1_epi32(static_cast<int>(lines.masks[i]));
    __m256i t = _mm256_add_epi32(_mm256_set1_epi32(lines.offsets[i]), popcount_epi32(_mm256_and_si256(m, y)));
    v = _mm256_sub_epi32(v, _mm256_max_epi32(t, zero));
  }
  return v;
}

}  // namespace

void range(const OffsetLines& lines, std::uint32_t first, std::uint32_t count, std::int32_t* out) {
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::uint32_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i y = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(first + k)), step);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), evaluate8(lines, y));
  }
  for (; k < count; ++k) out[k] = evaluate_one(lines, first + k);
}

void list(const OffsetLines& lines, const std::uint32_t* subsets, std::size_t count, std::int32_t* out) {
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(subsets + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), evaluate8(lines, y));
  }
  for (; k < count; ++k) out[k] = evaluate_one(lines, subsets[k]);
}

}  // namespace planeforge::kernels::avx2
