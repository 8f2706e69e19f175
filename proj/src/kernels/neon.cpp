// NEON row kernels (aarch64). TBL lookups cover strides 16 and 32; wider rows
// and the bitset kernels use the scalar reference.

#include "prn/kernels.hpp"

#include <arm_neon.h>

namespace prn::kernels {
namespace {

const KernelTable& fallback() { return scalar_kernels(); }

inline uint8x16x2_t load_table32(const std::uint8_t* p) {
  uint8x16x2_t t;
  t.val[0] = vld1q_u8(p);
  t.val[1] = vld1q_u8(p + 16);
  return t;
}

void right_compose(const std::uint8_t* base, std::size_t stride,
                   const std::uint32_t* rows, std::size_t count,
                   const std::uint8_t* g, std::uint8_t* out) {
  if (stride == 16) {
    const uint8x16_t table = vld1q_u8(g);
    for (std::size_t j = 0; j < count; ++j) {
      const uint8x16_t idx = vld1q_u8(base + std::size_t{rows[j]} * 16);
      vst1q_u8(out + j * 16, vqtbl1q_u8(table, idx));
    }
    return;
  }
  if (stride == 32) {
    const uint8x16x2_t table = load_table32(g);
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint8_t* row = base + std::size_t{rows[j]} * 32;
      vst1q_u8(out + j * 32, vqtbl2q_u8(table, vld1q_u8(row)));
      vst1q_u8(out + j * 32 + 16, vqtbl2q_u8(table, vld1q_u8(row + 16)));
    }
    return;
  }
  fallback().right_compose(base, stride, rows, count, g, out);
}

void left_compose(const std::uint8_t* base, std::size_t stride,
                  const std::uint32_t* rows, std::size_t count,
                  const std::uint8_t* g, std::uint8_t* out) {
  if (stride == 16) {
    const uint8x16_t idx = vld1q_u8(g);
    for (std::size_t j = 0; j < count; ++j) {
      const uint8x16_t table = vld1q_u8(base + std::size_t{rows[j]} * 16);
      vst1q_u8(out + j * 16, vqtbl1q_u8(table, idx));
    }
    return;
  }
  if (stride == 32) {
    const uint8x16_t idx_lo = vld1q_u8(g);
    const uint8x16_t idx_hi = vld1q_u8(g + 16);
    for (std::size_t j = 0; j < count; ++j) {
      const uint8x16x2_t table = load_table32(base + std::size_t{rows[j]} * 32);
      vst1q_u8(out + j * 32, vqtbl2q_u8(table, idx_lo));
      vst1q_u8(out + j * 32 + 16, vqtbl2q_u8(table, idx_hi));
    }
    return;
  }
  fallback().left_compose(base, stride, rows, count, g, out);
}

void conjugate(const std::uint8_t* base, std::size_t stride,
               const std::uint32_t* rows, std::size_t count,
               const std::uint8_t* g, const std::uint8_t* ginv,
               std::uint8_t* out) {
  if (stride == 16) {
    const uint8x16_t pre = vld1q_u8(ginv);
    const uint8x16_t post = vld1q_u8(g);
    for (std::size_t j = 0; j < count; ++j) {
      const uint8x16_t table = vld1q_u8(base + std::size_t{rows[j]} * 16);
      vst1q_u8(out + j * 16, vqtbl1q_u8(post, vqtbl1q_u8(table, pre)));
    }
    return;
  }
  if (stride == 32) {
    const uint8x16_t pre_lo = vld1q_u8(ginv);
    const uint8x16_t pre_hi = vld1q_u8(ginv + 16);
    const uint8x16x2_t post = load_table32(g);
    for (std::size_t j = 0; j < count; ++j) {
      const uint8x16x2_t table = load_table32(base + std::size_t{rows[j]} * 32);
      vst1q_u8(out + j * 32, vqtbl2q_u8(post, vqtbl2q_u8(table, pre_lo)));
      vst1q_u8(out + j * 32 + 16, vqtbl2q_u8(post, vqtbl2q_u8(table, pre_hi)));
    }
    return;
  }
  fallback().conjugate(base, stride, rows, count, g, ginv, out);
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  return fallback().popcount(a, words);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  return fallback().and_popcount(a, b, words);
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b,
               std::size_t words) {
  return fallback().is_subset(a, b, words);
}

const KernelTable kTable{Isa::Neon, right_compose, left_compose, conjugate,
                         popcount,  and_popcount,  is_subset};

}  // namespace

const KernelTable* neon_kernels() { return &kTable; }

}  // namespace prn::kernels
