#pragma once

// Closed-form pronormality criteria for odd-index subgroups of products of
// wreath products Z_p wr Sym_n, and the arithmetic side conditions for
// products of symplectic groups.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "prn/decision.hpp"
#include "prn/wreath.hpp"

namespace prn {

// Decides whether H is pronormal in K for H <= K <= G = prod Z_{p_i} wr Sym_{n_i}.
//
// Applicable when |G : H| is odd and every bar(pi_i(H)) is all of Sym_{n_i};
// otherwise NotApplicable with the violated condition in the reasons. Then
// H is pronormal in K iff every factor passes, where factor i passes when
//   pi_i(K) != G_i, or n_i = 1, or p_i = 2, or p_i does not divide n_i,
//   or V_i- <= pi_i(H).
// Throws Error(AmbientMismatch) when H or K is not a subgroup of W.group().
Decision decide_wreath_product(const WreathProduct& W, const Subgroup& K, const Subgroup& H);

// The complement Sym_n of Z_m wr Sym_n (|A| = m) is pronormal iff gcd(m, n) = 1.
bool complement_pronormal_by_gcd(std::uint64_t order_a, std::uint64_t n);

// gcd(|A|, m) is a power of 2 for every 1 <= m <= max(ns).
bool odd_index_pronormal_in_abelian_wreaths(std::uint64_t order_a,
                                            std::span<const std::uint64_t> ns);

// n is a power of 2 or n = 2^w (2^(2k) + 1).
bool special_form(std::uint64_t n);

// q = r^k for a prime r and k >= 1.
bool is_prime_power(std::uint64_t q);

// Factors are (n, q): n is the symplectic rank (dimension 2n), q an odd prime
// power. True iff special_form(n) holds for every factor with q = +-3 mod 8.
// Throws Error(BadPrimePower) when some q is not an odd prime power.
bool symplectic_product_odd_index_pronormal(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> factors);

// Every binary digit of m is at most the matching digit of n.
bool binary_dominance(std::uint64_t m, std::uint64_t n);

}  // namespace prn
