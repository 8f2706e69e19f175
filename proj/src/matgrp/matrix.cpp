#include "prn/algebra.hpp"
#include "prn/error.hpp"
#include "prn/matgrp.hpp"

namespace prn {

namespace {

void require_same_shape(const GFMatrix& a, const GFMatrix& b, const char* op) {
  if (a.p != b.p || a.d != b.d)
    throw Error(Errc::ShapeMismatch, std::string(op) + ": matrices of different (p, d)");
}

}  // namespace

GFMatrix make_matrix(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> entries) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "matrix modulus " + std::to_string(p) + " is not prime");
  if (entries.size() != std::size_t{d} * d)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(d * d) + " matrix entries");
  for (std::uint32_t x : entries)
    if (x >= p) throw Error(Errc::InvalidArgument, "matrix entry out of range");
  return GFMatrix{p, d, std::move(entries)};
}

GFMatrix mat_identity(std::uint32_t p, std::uint32_t d) {
  GFMatrix m{p, d, std::vector<std::uint32_t>(std::size_t{d} * d, 0)};
  for (std::uint32_t i = 0; i < d; ++i) m.a[i * d + i] = 1;
  return m;
}

GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b) {
  require_same_shape(a, b, "mat_mul");
  return multiply(a, b).as<GFMatrix>();
}

GFMatrix mat_inv(const GFMatrix& a) { return inverse(a).as<GFMatrix>(); }

GFMatrix mat_transpose(const GFMatrix& a) {
  GFMatrix t = a;
  for (std::uint32_t r = 0; r < a.d; ++r)
    for (std::uint32_t c = 0; c < a.d; ++c) t.a[c * a.d + r] = a.at(r, c);
  return t;
}

std::uint32_t mat_det(const GFMatrix& m) {
  const std::uint64_t p = m.p;
  const std::size_t d = m.d;
  std::vector<std::uint64_t> w(m.a.begin(), m.a.end());
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && w[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < d; ++c) std::swap(w[pivot * d + c], w[col * d + c]);
      det = (p - det) % p;
    }
    const std::uint64_t x = w[col * d + col];
    det = det * x % p;
    // x^(p-2) inverts x in GF(p)
    std::uint64_t inv = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    for (std::size_t r = col + 1; r < d; ++r) {
      const std::uint64_t f = w[r * d + col] * inv % p;
      for (std::size_t c = col; c < d; ++c) w[r * d + c] = (w[r * d + c] + (p - f) * w[col * d + c]) % p;
    }
  }
  return static_cast<std::uint32_t>(det);
}

SymplecticForm SymplecticForm::standard(std::uint32_t p, std::uint32_t rank) {
  GFMatrix J{p, 2 * rank, std::vector<std::uint32_t>(4 * std::size_t{rank} * rank, 0)};
  for (std::uint32_t k = 0; k < rank; ++k) {
    const std::uint32_t i = 2 * k;
    J.a[i * J.d + i + 1] = 1;
    J.a[(i + 1) * J.d + i] = p - 1;
  }
  return SymplecticForm{std::move(J)};
}

bool preserves_form(const GFMatrix& a, const SymplecticForm& form) {
  require_same_shape(a, form.J, "preserves_form");
  return mat_mul(mat_mul(mat_transpose(a), form.J), a) == form.J;
}

GroupPtr build_sp2(std::uint32_t q, std::size_t cap) {
  if (!is_prime(q)) throw Error(Errc::BadPrimePower, "Sp2(q) is built only for prime q");
  std::vector<Elem> gens{make_matrix(q, 2, {1, 1, 0, 1}), make_matrix(q, 2, {1, 0, 1, 1})};
  return closure(std::move(gens), cap, "Sp2(" + std::to_string(q) + ")");
}

GroupPtr build_symmetric(std::uint32_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "Sym_n needs n >= 1");
  std::vector<Elem> gens;
  if (n >= 2) gens.emplace_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.emplace_back(Perm(std::move(cycle)));
  }
  if (gens.empty()) gens.emplace_back(Perm::identity(n));
  return closure(std::move(gens), kDefaultClosureCap, "Sym" + std::to_string(n));
}

GroupPtr build_alternating(std::uint32_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "Alt_n needs n >= 1");
  std::vector<Elem> gens;
  if (n >= 3) {
    gens.emplace_back(Perm::from_cycles(n, {{0, 1, 2}}));
    // (0 1 ... n-1) for odd n, (1 2 ... n-1) for even n
    std::vector<Point> cycle(n);
    const std::uint32_t start = n % 2 ? 0 : 1;
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = i;
    for (std::uint32_t i = start; i < n; ++i) cycle[i] = i + 1 < n ? i + 1 : start;
    if (n > 3) gens.emplace_back(Perm(std::move(cycle)));
  } else {
    gens.emplace_back(Perm::identity(n));
  }
  return closure(std::move(gens), kDefaultClosureCap, "Alt" + std::to_string(n));
}

GroupPtr build_psl2_7() {
  std::vector<Elem> gens;
  for (std::uint32_t r = 0; r < 3; ++r)
    for (std::uint32_t c = 0; c < 3; ++c) {
      if (r == c) continue;
      GFMatrix t = mat_identity(2, 3);
      t.a[r * 3 + c] = 1;
      gens.emplace_back(std::move(t));
    }
  return closure(std::move(gens), kDefaultClosureCap, "PSL2(7)");
}

}  // namespace prn
