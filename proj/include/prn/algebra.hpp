#pragma once

// Subgroup algebra inside one materialized ambient group.
//
// Every operation that takes two subgroups requires a common ambient group
// and throws Error(AmbientMismatch) otherwise. Where a classical operation is
// stated for a group G, the containing subgroup K plays that role, so the
// same code serves G itself (Subgroup::whole) and any intermediate subgroup.

#include <cstdint>
#include <vector>

#include "prn/subgroup.hpp"

namespace prn {

// g^-1 H g.
Subgroup conjugate_subgroup(const Subgroup& H, Index g);
// Throws Error(ElementNotInAmbient).
Subgroup conjugate_subgroup(const Subgroup& H, const Elem& g);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool normalizes(const Subgroup& H, Index g);
// N_K(H) = {g in K : H^g = H}, by a scan over K that discards a whole coset
// of the normalizer found so far on every failed test.
Subgroup normalizer(const Subgroup& K, const Subgroup& H);
// Whether every element of K normalizes H.
bool is_normal_in(const Subgroup& H, const Subgroup& K);
// Smallest subgroup containing H that is normalized by K.
Subgroup normal_closure(const Subgroup& H, const Subgroup& K);
// <[x, y] : x in X, y in Y> with [x, y] = x^-1 y^-1 x y.
Subgroup commutator_subgroup(const Subgroup& X, const Subgroup& Y);
Subgroup center(const Subgroup& K);
bool is_abelian(const Subgroup& K);

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);
// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Sylow p-subgroup of K: start from the trivial subgroup and repeatedly
// adjoin the least element of N_K(P) \ P whose image in N_K(P)/P has p-power
// order. Deterministic. Throws Error(InvalidArgument) unless p is prime.
Subgroup sylow_p(const Subgroup& K, std::uint64_t p);
// Largest normal p-subgroup of K: intersection of the conjugates of one Sylow.
Subgroup p_core(const Subgroup& K, std::uint64_t p);
// |K : H| odd. Requires H <= K.
bool has_odd_index(const Subgroup& K, const Subgroup& H);
// Sylow p-subgroups of K are self-normalizing.
bool in_class_Xp(const Subgroup& K, std::uint64_t p);

// All H with S <= H <= K, grown by joins <C, g> from S. Sorted by order,
// then by element list. Throws Error(BudgetExceeded) past `budget` subgroups.
std::vector<Subgroup> overgroups_of(const Subgroup& S, const Subgroup& K,
                                    std::size_t budget = 4096);
// Every subgroup of K (overgroups of the trivial subgroup).
std::vector<Subgroup> all_subgroups(const Subgroup& K, std::size_t budget = 4096);

}  // namespace prn
