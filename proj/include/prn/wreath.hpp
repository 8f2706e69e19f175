#pragma once

// Wreath products Z_p wr Sym_n = V x| B, direct products of them, and the
// generic L wr Sym_n over an arbitrary materialized base group.
//
// Conventions: (v, s)(w, t) = (v + w o s, s t) with (w o s)_i = w_{s(i)}, and
// s t means "s then t". The base V = (Z_p)^n is written additively in reports.
// V+ is the constant vectors, V- the vectors with coordinate sum zero.

#include <cstdint>
#include <vector>

#include "prn/product.hpp"
#include "prn/subgroup.hpp"

namespace prn {

struct WreathFactor {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  friend bool operator==(const WreathFactor&, const WreathFactor&) = default;
};

struct WreathGroupSpec {
  std::vector<WreathFactor> factors;

  // Throws Error(InvalidArgument) unless every p is prime and every n >= 1.
  void validate() const;
  std::uint64_t order() const;
};

// Throws Error(ShapeMismatch) for different (p, n).
WreathElem w_mul(const WreathElem& a, const WreathElem& b);
WreathElem w_inv(const WreathElem& a);
WreathElem w_identity(std::uint32_t p, std::uint32_t n);

// G = G_1 x ... x G_t with G_i = Z_{p_i} wr Sym_{n_i}, on TupleElem values
// whose parts are WreathElem.
class WreathProduct {
 public:
  explicit WreathProduct(WreathGroupSpec spec, std::size_t cap = kDefaultClosureCap);

  const WreathGroupSpec& spec() const noexcept { return spec_; }
  const GroupPtr& group() const noexcept { return product_.group; }
  const DirectProduct& product() const noexcept { return product_; }
  std::size_t factor_count() const noexcept { return spec_.factors.size(); }
  // Standalone G_i on WreathElem values.
  const GroupPtr& factor(std::size_t i) const;
  Subgroup whole() const { return Subgroup::whole(group()); }

  // Subgroups of the standalone factor G_i.
  Subgroup factor_base(std::size_t i) const;        // V_i
  Subgroup factor_complement(std::size_t i) const;  // B_i = Sym_{n_i}
  Subgroup factor_v_plus(std::size_t i) const;
  Subgroup factor_v_minus(std::size_t i) const;

  // Subgroups of the whole product.
  Subgroup base() const;        // V = prod V_i
  Subgroup complement() const;  // B = prod B_i
  Subgroup base_factor(std::size_t i) const;
  Subgroup v_plus(std::size_t i) const;
  Subgroup v_minus(std::size_t i) const;

  // pi_i(H) <= G_i
  Subgroup project(std::size_t i, const Subgroup& H) const;
  const WreathElem& component(Index x, std::size_t i) const;
  // The top permutation of component i (the bar map of factor i).
  Perm bar(std::size_t i, Index x) const;
  std::vector<Perm> bar(Index x) const;
  // bar(H) as a subgroup of the complement B.
  Subgroup bar_subgroup(const Subgroup& H) const;
  // |bar(pi_i(H))|
  std::uint64_t bar_image_order(std::size_t i, const Subgroup& H) const;
  bool bar_is_full(std::size_t i, const Subgroup& H) const;
  // sigma_i: the vector part of component i.
  const std::vector<std::uint32_t>& sigma(std::size_t i, Index x) const;

  Index element(const std::vector<WreathElem>& parts) const;

 private:
  void check_factor(std::size_t i) const;

  WreathGroupSpec spec_;
  DirectProduct product_;
};

WreathProduct build_product(WreathGroupSpec spec, std::size_t cap = kDefaultClosureCap);

// V+ and V- as subgroups of a freshly built Z_p wr Sym_n (single factor).
Subgroup v_plus(std::uint32_t p, std::uint32_t n);
Subgroup v_minus(std::uint32_t p, std::uint32_t n);

// Whether the embedded V_i- lies in H. Throws Error(BadFactorIndex).
bool v_minus_contained(const WreathProduct& W, const Subgroup& H, std::size_t factor);

// L wr Sym_n on BaseWreathElem values: (a, s)(b, t) = (a_i b_{s(i)}, s t).
class GenericWreath {
 public:
  // Throws Error(CapExceeded) when |L|^n n! passes `cap`.
  GenericWreath(GroupPtr base, std::uint32_t n, std::size_t cap = kDefaultClosureCap);

  const GroupPtr& group() const noexcept { return group_; }
  const GroupPtr& base() const noexcept { return base_; }
  std::uint32_t degree() const noexcept { return n_; }

  // K = K_1 x ... x K_n, the base subgroup.
  Subgroup base_subgroup() const;
  // K_i: copies of L in slot i.
  Subgroup slot(std::size_t i) const;
  // Elements with trivial base part (a copy of Sym_n).
  Subgroup top_subgroup() const;
  // P_1 x ... x P_n for P <= L.
  Subgroup base_power(const Subgroup& P) const;
  // P wr Sym_n for P <= L.
  Subgroup wreath_of(const Subgroup& P) const;

  Perm top(Index x) const;
  // Base index of slot i of x.
  Index component(Index x, std::size_t i) const;
  Index element(const std::vector<Index>& slots, const Perm& top) const;

 private:
  GroupPtr base_;
  std::uint32_t n_;
  GroupPtr group_;
};

GenericWreath generic_wreath(GroupPtr base, std::uint32_t n,
                             std::size_t cap = kDefaultClosureCap);

}  // namespace prn
