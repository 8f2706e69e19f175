#pragma once

// Permutations of {0, ..., n-1} in one-line notation.
//
// Products are read left to right: (a * b)(x) = b(a(x)). This is the only
// convention used anywhere in the library, including the wreath products and
// every serialized element.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace prn {

using Point = std::uint32_t;

class Perm {
 public:
  Perm() = default;
  // Throws Error(InvalidArgument) unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  // Cycle notation, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);
  // Inverse of rank(): the r-th permutation in lexicographic order.
  static Perm unrank(std::size_t degree, std::uint64_t r);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  bool is_transposition() const noexcept;
  std::uint64_t order() const;
  // Lexicographic rank among all degree! permutations (Lehmer code).
  std::uint64_t rank() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

// a then b. Throws Error(DegreeMismatch).
Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

std::uint64_t factorial(std::size_t n);

// Orbits of <gens> on {0..degree-1}, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(std::span<const Perm> gens, std::size_t degree);

bool is_transitive(std::span<const Perm> gens);
// Requires <gens> transitive (Error(NotTransitive) otherwise).
bool is_primitive(std::span<const Perm> gens);
// Whether the closure <gens> contains a transposition. Enumerates the closure,
// so degree must stay small (cap on closure size, Error(CapExceeded)).
bool contains_transposition(std::span<const Perm> gens,
                            std::size_t cap = std::size_t{1} << 21);
// Points fixed by every generator (equivalently by <gens>).
std::vector<Point> fixed_points(std::span<const Perm> gens, std::size_t degree);

}  // namespace prn
