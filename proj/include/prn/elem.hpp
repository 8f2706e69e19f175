#pragma once

// Elem: a group element of one of a handful of concrete shapes.
//
// Every payload has a canonical mixed-radix integer code (vector digits most
// significant, then the permutation rank, then matrix entries row-major);
// codes order the elements of every materialized group. Elements of one
// ambient group share a shape, and the code is injective on a shape.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "prn/perm.hpp"

namespace prn {

class Elem;

// (v, s) in Z_p wr Sym_n. The product is (v, s)(w, t) = (v + w o s, s t) with
// (w o s)_i = w_{s(i)}, so that s t is "s then t" like every other product.
struct WreathElem {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> v;
  Perm s;
  friend bool operator==(const WreathElem&, const WreathElem&) = default;
};

// d x d matrix over GF(p), row-major; acts on row vectors from the right.
struct GFMatrix {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> a;
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * d + c]; }
  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;
};

// Element of a direct product.
struct TupleElem {
  std::vector<Elem> parts;
  friend bool operator==(const TupleElem&, const TupleElem&);
};

// (a_0..a_{n-1}; s) in L wr Sym_n: (a, s)(b, t) = (a_i b_{s(i)}, s t).
struct BaseWreathElem {
  std::vector<Elem> base;
  Perm top;
  friend bool operator==(const BaseWreathElem&, const BaseWreathElem&);
};

// Coset of a normal subgroup, labelled by its least element. Products are
// only defined through the owning quotient group.
struct CosetElem {
  std::shared_ptr<const Elem> rep;
  friend bool operator==(const CosetElem& x, const CosetElem& y);
};

class Elem {
 public:
  using Payload = std::variant<Perm, WreathElem, GFMatrix, TupleElem,
                               BaseWreathElem, CosetElem>;

  Elem() = default;
  Elem(Perm p) : payload_(std::move(p)) {}
  Elem(WreathElem w) : payload_(std::move(w)) {}
  Elem(GFMatrix m) : payload_(std::move(m)) {}
  Elem(TupleElem t) : payload_(std::move(t)) {}
  Elem(BaseWreathElem w) : payload_(std::move(w)) {}
  Elem(CosetElem c) : payload_(std::move(c)) {}

  const Payload& payload() const noexcept { return payload_; }
  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(payload_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(payload_);
  }

  friend bool operator==(const Elem&, const Elem&) = default;

 private:
  Payload payload_;
};

// Element arithmetic. Shape mismatches throw Error(IncompatiblePayloads);
// cosets throw as well (use the quotient group instead).
Elem multiply(const Elem& a, const Elem& b);
Elem inverse(const Elem& a);
Elem identity_like(const Elem& a);
bool same_shape(const Elem& a, const Elem& b);

// Canonical code and the exclusive upper bound of codes of this shape.
// Throws Error(CapExceeded) when the bound leaves 64 bits.
std::uint64_t encode(const Elem& a);
std::uint64_t code_bound(const Elem& a);

// Faithful right action on points 0..degree-1 used by the fast engine;
// 0 when the shape has none (cosets) or the degree exceeds 255.
std::size_t action_degree(const Elem& a);
// Writes action_degree(a) images; x * a = out[x].
void action_images(const Elem& a, std::uint8_t* out);

std::string to_string(const Elem& a);

}  // namespace prn
