// AVX2 row and bitset kernels. Compiled without -mavx2; each function carries
// a target attribute so the rest of the library stays baseline x86-64, and the
// dispatcher only hands these out after a CPUID check.

#include "prn/kernels.hpp"

#include <immintrin.h>

#define PRN_AVX2 __attribute__((target("avx2")))

namespace prn::kernels {
namespace {

const KernelTable& fallback() { return scalar_kernels(); }

// 32-entry table lookup; idx bytes must be < 32.
PRN_AVX2 inline __m256i lookup32(__m256i lo, __m256i hi, __m256i idx) {
  const __m256i a = _mm256_shuffle_epi8(lo, idx);
  const __m256i b = _mm256_shuffle_epi8(hi, idx);
  const __m256i high = _mm256_cmpgt_epi8(idx, _mm256_set1_epi8(15));
  return _mm256_blendv_epi8(a, b, high);
}

PRN_AVX2 inline __m256i load_pair16(const std::uint8_t* a, const std::uint8_t* b) {
  const __m128i ra = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a));
  const __m128i rb = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b));
  return _mm256_inserti128_si256(_mm256_castsi128_si256(ra), rb, 1);
}

PRN_AVX2 inline __m256i broadcast16(const std::uint8_t* p) {
  return _mm256_broadcastsi128_si256(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

PRN_AVX2 inline __m256i load32(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

PRN_AVX2 inline void store32(std::uint8_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

PRN_AVX2 void right_compose(const std::uint8_t* base, std::size_t stride,
                            const std::uint32_t* rows, std::size_t count,
                            const std::uint8_t* g, std::uint8_t* out) {
  if (stride == 16) {
    const __m256i table = broadcast16(g);
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
      const __m256i idx = load_pair16(base + std::size_t{rows[j]} * 16,
                                      base + std::size_t{rows[j + 1]} * 16);
      store32(out + j * 16, _mm256_shuffle_epi8(table, idx));
    }
    if (j < count) {
      const __m128i idx = _mm_loadu_si128(
          reinterpret_cast<const __m128i*>(base + std::size_t{rows[j]} * 16));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(out + j * 16),
                       _mm_shuffle_epi8(_mm256_castsi256_si128(table), idx));
    }
    return;
  }
  if (stride == 32) {
    const __m256i lo = broadcast16(g);
    const __m256i hi = broadcast16(g + 16);
    for (std::size_t j = 0; j < count; ++j) {
      const __m256i idx = load32(base + std::size_t{rows[j]} * 32);
      store32(out + j * 32, lookup32(lo, hi, idx));
    }
    return;
  }
  fallback().right_compose(base, stride, rows, count, g, out);
}

PRN_AVX2 void left_compose(const std::uint8_t* base, std::size_t stride,
                           const std::uint32_t* rows, std::size_t count,
                           const std::uint8_t* g, std::uint8_t* out) {
  if (stride == 16) {
    const __m256i idx = broadcast16(g);
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
      const __m256i table = load_pair16(base + std::size_t{rows[j]} * 16,
                                        base + std::size_t{rows[j + 1]} * 16);
      store32(out + j * 16, _mm256_shuffle_epi8(table, idx));
    }
    if (j < count) {
      const __m128i table = _mm_loadu_si128(
          reinterpret_cast<const __m128i*>(base + std::size_t{rows[j]} * 16));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(out + j * 16),
                       _mm_shuffle_epi8(table, _mm256_castsi256_si128(idx)));
    }
    return;
  }
  if (stride == 32) {
    const __m256i idx = load32(g);
    for (std::size_t j = 0; j < count; ++j) {
      const __m256i row = load32(base + std::size_t{rows[j]} * 32);
      const __m256i lo = _mm256_permute2x128_si256(row, row, 0x00);
      const __m256i hi = _mm256_permute2x128_si256(row, row, 0x11);
      store32(out + j * 32, lookup32(lo, hi, idx));
    }
    return;
  }
  fallback().left_compose(base, stride, rows, count, g, out);
}

PRN_AVX2 void conjugate(const std::uint8_t* base, std::size_t stride,
                        const std::uint32_t* rows, std::size_t count,
                        const std::uint8_t* g, const std::uint8_t* ginv,
                        std::uint8_t* out) {
  if (stride == 16) {
    const __m256i pre = broadcast16(ginv);
    const __m256i post = broadcast16(g);
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
      const __m256i table = load_pair16(base + std::size_t{rows[j]} * 16,
                                        base + std::size_t{rows[j + 1]} * 16);
      const __m256i mid = _mm256_shuffle_epi8(table, pre);
      store32(out + j * 16, _mm256_shuffle_epi8(post, mid));
    }
    if (j < count) {
      const __m128i table = _mm_loadu_si128(
          reinterpret_cast<const __m128i*>(base + std::size_t{rows[j]} * 16));
      const __m128i mid = _mm_shuffle_epi8(table, _mm256_castsi256_si128(pre));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(out + j * 16),
                       _mm_shuffle_epi8(_mm256_castsi256_si128(post), mid));
    }
    return;
  }
  if (stride == 32) {
    const __m256i pre = load32(ginv);
    const __m256i post_lo = broadcast16(g);
    const __m256i post_hi = broadcast16(g + 16);
    for (std::size_t j = 0; j < count; ++j) {
      const __m256i row = load32(base + std::size_t{rows[j]} * 32);
      const __m256i lo = _mm256_permute2x128_si256(row, row, 0x00);
      const __m256i hi = _mm256_permute2x128_si256(row, row, 0x11);
      const __m256i mid = lookup32(lo, hi, pre);
      store32(out + j * 32, lookup32(post_lo, post_hi, mid));
    }
    return;
  }
  fallback().conjugate(base, stride, rows, count, g, ginv, out);
}

// Nibble-table popcount, summed per 64-bit lane with SAD.
PRN_AVX2 inline __m256i popcount_lanes(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                         3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                         2, 3, 2, 3, 3, 4);
  const __m256i mask = _mm256_set1_epi8(0x0F);
  const __m256i lo = _mm256_and_si256(v, mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo),
                                         _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

PRN_AVX2 inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

PRN_AVX2 std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::uint64_t total = horizontal_sum(acc);
  return total + fallback().popcount(a + i, words - i);
}

PRN_AVX2 std::uint64_t and_popcount(const std::uint64_t* a,
                                    const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
  }
  std::uint64_t total = horizontal_sum(acc);
  return total + fallback().and_popcount(a + i, b + i, words - i);
}

PRN_AVX2 bool is_subset(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc: (~vb & va) == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  return fallback().is_subset(a + i, b + i, words - i);
}

const KernelTable kTable{Isa::Avx2, right_compose, left_compose, conjugate,
                         popcount,  and_popcount,  is_subset};

}  // namespace

const KernelTable* avx2_kernels() { return &kTable; }

}  // namespace prn::kernels
