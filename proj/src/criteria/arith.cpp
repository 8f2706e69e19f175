#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "prn/algebra.hpp"
#include "prn/criteria.hpp"
#include "prn/error.hpp"

namespace prn {

bool complement_pronormal_by_gcd(std::uint64_t order_a, std::uint64_t n) {
  return std::gcd(order_a, n) == 1;
}

bool odd_index_pronormal_in_abelian_wreaths(std::uint64_t order_a,
                                            std::span<const std::uint64_t> ns) {
  std::uint64_t top = 0;
  for (std::uint64_t n : ns) top = std::max(top, n);
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::uint64_t g = std::gcd(order_a, m);
    if ((g & (g - 1)) != 0) return false;
  }
  return true;
}

bool special_form(std::uint64_t n) {
  if (n == 0) return false;
  const std::uint64_t odd = n >> std::countr_zero(n);
  if (odd == 1) return true;
  const std::uint64_t t = odd - 1;
  // t must be 4^k with k >= 1: a single set bit at an even position.
  return (t & (t - 1)) == 0 && std::countr_zero(t) % 2 == 0;
}

namespace {

// r^k, or 0 when it exceeds `limit`.
std::uint64_t bounded_pow(std::uint64_t r, unsigned k, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && out > limit / r) return 0;
    out *= r;
  }
  return out;
}

}  // namespace

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (unsigned k = 1; k < 64; ++k) {
    const double guess = std::round(std::pow(static_cast<double>(q), 1.0 / k));
    if (guess < 2.0) break;
    const auto base = static_cast<std::uint64_t>(guess);
    for (std::uint64_t r = base > 2 ? base - 1 : 2; r <= base + 1; ++r)
      if (bounded_pow(r, k, q) == q && is_prime(r)) return true;
  }
  return false;
}

bool symplectic_product_odd_index_pronormal(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> factors) {
  bool ok = true;
  for (const auto& [n, q] : factors) {
    if (q % 2 == 0 || !is_prime_power(q))
      throw Error(Errc::BadPrimePower, std::to_string(q) + " is not an odd prime power");
    if (n < 1) throw Error(Errc::InvalidArgument, "symplectic rank must be at least 1");
    const std::uint64_t r = q % 8;
    if ((r == 3 || r == 5) && !special_form(n)) ok = false;
  }
  return ok;
}

bool binary_dominance(std::uint64_t m, std::uint64_t n) { return (m & ~n) == 0; }

}  // namespace prn
