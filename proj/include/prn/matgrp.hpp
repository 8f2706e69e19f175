#pragma once

// Small matrix groups over GF(p) and the desk-scale symplectic pipeline:
// M = Sp2(3) wr Sym_n, its 2-core O_2(M) = Q8^n, and the isomorphism
// M / O_2(M) -> Z_3 wr Sym_n used to transfer odd-index subgroups to the
// wreath-product criterion.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "prn/decision.hpp"
#include "prn/quotient.hpp"
#include "prn/wreath.hpp"

namespace prn {

// Throws Error(InvalidArgument) for a non-prime p, a wrong entry count, or
// an entry >= p.
GFMatrix make_matrix(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> entries);
GFMatrix mat_identity(std::uint32_t p, std::uint32_t d);
// Throw Error(ShapeMismatch) for different (p, d).
GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b);
GFMatrix mat_inv(const GFMatrix& a);
GFMatrix mat_transpose(const GFMatrix& a);
std::uint32_t mat_det(const GFMatrix& a);

// J = diag(B, ..., B) with B = [[0, 1], [-1, 0]].
struct SymplecticForm {
  GFMatrix J;
  static SymplecticForm standard(std::uint32_t p, std::uint32_t rank);
};

// a^T J a = J. Throws Error(ShapeMismatch).
bool preserves_form(const GFMatrix& a, const SymplecticForm& form);

// Sp2(q) = SL2(q), generated by [[1,1],[0,1]] and [[1,0],[1,1]]. Only prime q
// is supported (Error(BadPrimePower) otherwise).
GroupPtr build_sp2(std::uint32_t q = 3, std::size_t cap = kDefaultClosureCap);
GroupPtr build_symmetric(std::uint32_t n);
GroupPtr build_alternating(std::uint32_t n);
// GL3(2), isomorphic to PSL2(7), acting on the 7 nonzero vectors.
GroupPtr build_psl2_7();

// A surjection from N_G(T) (or all of G) onto Z_r wr Sym_n for
// G = L wr Sym_n and T = P^n, where P is normal in a subgroup Q <= L with
// Q/P cyclic of prime order r. The label of q in Q is the k with q in P t^k,
// t being the least element of Q outside P; the map sends
// (a_1..a_n; s) to (label(a_1)..label(a_n); s).
struct CyclicSectionMap {
  std::shared_ptr<const GenericWreath> M;
  std::shared_ptr<const WreathProduct> target;
  std::uint32_t r = 0;
  // label per base-group index; -1 outside Q
  std::vector<int> label;
  // M index -> target index; ~0 outside the domain
  std::vector<Index> to_target;
  Subgroup domain;
  Subgroup kernel;

  // Image of a subgroup of the domain.
  Subgroup transport(const Subgroup& H) const;
};

// Builds the map for Q, P <= L and checks that it is a homomorphism on the
// domain Q wr Sym_n with kernel P^n and full image. Throws
// Error(StructureCheckFailed) when any check fails.
CyclicSectionMap cyclic_section_map(std::shared_ptr<const GenericWreath> M, const Subgroup& Q,
                                    const Subgroup& P);

struct CoreQuotient {
  CyclicSectionMap map;
  Subgroup core;           // O_2(M)
  QuotientGroup quotient;  // M / O_2(M)
  // quotient index -> target index
  std::vector<Index> iso;
};

// M = generic_wreath(Sp2(3), n). Computes O_2(M), checks it equals
// O_2(Sp2(3))^n, forms M / O_2(M) and the isomorphism onto Z_3 wr Sym_n,
// verified as a bijective homomorphism. Throws Error(StructureCheckFailed).
CoreQuotient o2_epimorphism(std::shared_ptr<const GenericWreath> M);

// Decides whether an odd-index H <= M with bar(H) = Sym_n is pronormal in M
// by transporting H to Z_3 wr Sym_n and applying decide_wreath_product.
// Subgroups whose top image is smaller are reported NotApplicable.
Decision symplectic_wreath_pipeline(const CoreQuotient& E, const Subgroup& H);

struct WreathNormalizerReport {
  std::size_t order_P = 0;
  std::size_t order_NL_P = 0;
  std::size_t order_T = 0;
  std::size_t order_N = 0;
  std::size_t quotient_order = 0;
  // T is the product of its intersections with the n base copies, each a
  // Sylow subgroup of L.
  bool t_is_product_of_sylows = false;
  // N_G(T) is the product of the slot normalizers extended by Sym_n.
  bool normalizer_is_wreath = false;
  // |N_G(T)| = |N_L(P)|^n n! and |N_G(T)/T| = |N_L(P)/P|^n n!.
  bool order_formula = false;
  // Set when N_L(P)/P has prime order r: N_G(T)/T = Z_r wr Sym_n verified.
  std::optional<bool> cyclic_wreath_isomorphism;
  std::uint32_t cyclic_order = 0;
};

// Structure of the Sylow-intersection normalizer in G = L wr Sym_n, with
// T = base n S for a Sylow p-subgroup S of G.
WreathNormalizerReport sylow_normalizer_wreath_structure(GroupPtr L, std::uint32_t n,
                                                         std::uint64_t p,
                                                         std::size_t cap = kDefaultClosureCap);

}  // namespace prn
