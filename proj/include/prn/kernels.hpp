#pragma once

// Data-parallel inner loops of the group engine.
//
// Group elements with a faithful action on at most 255 points are stored as
// byte rows of a fixed stride (16, 32, 64, ...). Points past the degree are
// padded with the identity, so every byte of a row is < stride. The row
// kernels below compose such rows in bulk; the bitset kernels back subgroup
// membership sets. Every ISA variant must produce bit-identical output to the
// scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace prn::kernels {

enum class Isa : std::uint8_t { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;

  // out_j[x] = g[row_j[x]]      (row_j then g, left-to-right)
  void (*right_compose)(const std::uint8_t* base, std::size_t stride,
                        const std::uint32_t* rows, std::size_t count,
                        const std::uint8_t* g, std::uint8_t* out);
  // out_j[x] = row_j[g[x]]      (g then row_j)
  void (*left_compose)(const std::uint8_t* base, std::size_t stride,
                       const std::uint32_t* rows, std::size_t count,
                       const std::uint8_t* g, std::uint8_t* out);
  // out_j[x] = g[row_j[ginv[x]]]  (g^-1 row_j g)
  void (*conjugate)(const std::uint8_t* base, std::size_t stride,
                    const std::uint32_t* rows, std::size_t count,
                    const std::uint8_t* g, const std::uint8_t* ginv,
                    std::uint8_t* out);

  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t words);
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
  // true iff every bit of a is set in b
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t words);
};

const KernelTable& scalar_kernels();
// nullptr when the variant was not compiled for this target
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

// Selected once from CPU features; PRN_ISA=scalar|avx2|neon overrides.
const KernelTable& active();
Isa active_isa();
// Throws prn::Error if the ISA is not available.
void select(Isa isa);

}  // namespace prn::kernels
