#include "prn/kernels.hpp"

#include <bit>

namespace prn::kernels {
namespace {

void right_compose(const std::uint8_t* base, std::size_t stride,
                   const std::uint32_t* rows, std::size_t count,
                   const std::uint8_t* g, std::uint8_t* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint8_t* row = base + static_cast<std::size_t>(rows[j]) * stride;
    for (std::size_t x = 0; x < stride; ++x) out[x] = g[row[x]];
    out += stride;
  }
}

void left_compose(const std::uint8_t* base, std::size_t stride,
                  const std::uint32_t* rows, std::size_t count,
                  const std::uint8_t* g, std::uint8_t* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint8_t* row = base + static_cast<std::size_t>(rows[j]) * stride;
    for (std::size_t x = 0; x < stride; ++x) out[x] = row[g[x]];
    out += stride;
  }
}

void conjugate(const std::uint8_t* base, std::size_t stride,
               const std::uint32_t* rows, std::size_t count,
               const std::uint8_t* g, const std::uint8_t* ginv,
               std::uint8_t* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint8_t* row = base + static_cast<std::size_t>(rows[j]) * stride;
    for (std::size_t x = 0; x < stride; ++x) out[x] = g[row[ginv[x]]];
    out += stride;
  }
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b,
               std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

const KernelTable kTable{Isa::Scalar, right_compose, left_compose, conjugate,
                         popcount,    and_popcount,  is_subset};

}  // namespace

const KernelTable& scalar_kernels() { return kTable; }

}  // namespace prn::kernels
