#include <cstdlib>
#include <string>

#include "prn/error.hpp"
#include "prn/kernels.hpp"

namespace prn::kernels {

#if !(defined(__x86_64__) || defined(__i386__))
const KernelTable* avx2_kernels() { return nullptr; }
#endif
#if !(defined(__aarch64__) || defined(__ARM_NEON))
const KernelTable* neon_kernels() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_kernels();
    case Isa::Avx2:
      return cpu_has_avx2() ? avx2_kernels() : nullptr;
    case Isa::Neon:
      return neon_kernels();
  }
  return nullptr;
}

const KernelTable* initial() {
  if (const char* env = std::getenv("PRN_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (want == isa_name(isa))
        if (const KernelTable* t = table_for(isa)) return t;
  }
  if (const KernelTable* t = table_for(Isa::Avx2)) return t;
  if (const KernelTable* t = table_for(Isa::Neon)) return t;
  return &scalar_kernels();
}

const KernelTable*& current() {
  static const KernelTable* table = initial();
  return table;
}

}  // namespace

bool isa_available(Isa isa) { return table_for(isa) != nullptr; }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& active() { return *current(); }

Isa active_isa() { return current()->isa; }

void select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (!t)
    throw Error(Errc::InvalidArgument,
                "instruction set not available: " + std::string(isa_name(isa)));
  current() = t;
}

}  // namespace prn::kernels
