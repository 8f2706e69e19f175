#pragma once

// Pronormality decided from first principles, plus the refinements that
// shrink the search, and a reduction to a smaller pair.
//
// H is pronormal in K when for every g in K the subgroups H and H^g are
// conjugate in <H, H^g>. All functions take subgroups of one ambient group;
// the containing subgroup K plays the role of the group.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "prn/decision.hpp"
#include "prn/subgroup.hpp"

namespace prn {

// Memoizes results that do not depend on K: normalizers in the ambient
// group, and whether H and a conjugate X are conjugate in <H, X>. Keys are
// pairs of independent 64-bit hashes of the membership sets. Not thread-safe.
class OracleCache {
 public:
  const Subgroup& ambient_normalizer(const Subgroup& H);
  std::optional<bool> pair(const Subgroup& H, const Bitset& X) const;
  void store_pair(const Subgroup& H, const Bitset& X, bool joined);

  std::size_t normalizer_hits = 0;
  std::size_t pair_hits = 0;

 private:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  std::map<Key, Subgroup> normalizers_;
  std::map<std::pair<Key, Key>, bool> pairs_;
};

// Scans g over K in canonical order, one coset of N_K(H) at a time. The
// first failing g (the least witness) is returned in `witnesses`.
// Throws Error(InvalidArgument) unless H <= K.
Decision pronormal_by_definition(const Subgroup& H, const Subgroup& K,
                                 OracleCache* cache = nullptr);

// The same scan restricted to g in N_K(S) for a Sylow subgroup S <= H.
// Throws Error(SylowNotContained) unless S <= H, Error(InvalidArgument)
// unless S is a Sylow subgroup of K.
Decision pronormal_via_sylow_normalizer(const Subgroup& H, const Subgroup& K, const Subgroup& S,
                                        OracleCache* cache = nullptr);

// For an abelian normal subgroup V of K with K = HV: H is pronormal in K iff
// U = N_U(H)[H, U] for every H-invariant U <= V. NotApplicable when the
// hypotheses fail; Error(BudgetExceeded) when |V| > v_cap.
Decision pronormal_via_abelian_supplement(const Subgroup& H, const Subgroup& V,
                                          const Subgroup& K, std::size_t v_cap = 243);

// Every subgroup of V normalized by all of H, smallest first.
std::vector<Subgroup> invariant_subgroups(const Subgroup& V, const Subgroup& H,
                                          std::size_t budget = 4096);

// H is pronormal in K iff, in every transitive action of K, N_K(H) is
// transitive on the fixed points of H. Checks the actions on the cosets of
// each L in Ls; NotPronormal names the first failing L. A clean pass is
// Pronormal only if `complete` says Ls meets every conjugacy class of
// subgroups of K, otherwise NotApplicable with a "partial" reason.
Decision hall_permutation_check(const Subgroup& H, const Subgroup& K,
                                const std::vector<Subgroup>& Ls, bool complete);

// Every overgroup of a Sylow p-subgroup of K is pronormal in K.
Decision overgroups_of_sylow_pronormal(const Subgroup& K, std::uint64_t p,
                                       std::size_t budget = 4096);

// Reduction of "H pronormal in K" along a normal subgroup A of K:
//   T = A n S for a Sylow p-subgroup S <= H, Y = N_A(H n A),
//   Z = N_{H n A}(T), H* = N_H(T), K* = <H*, N_Y(T)>,
// with H pronormal in K iff H* is pronormal in K*, provided K/A has
// self-normalizing Sylow p-subgroups and every overgroup of a Sylow
// p-subgroup of A is pronormal in A.
struct ReducedInstance {
  Subgroup S;
  Subgroup T;
  Subgroup Y;
  Subgroup Z;
  Subgroup H_star;
  Subgroup N_Y_T;
  Subgroup K_star;
  // The condition on A was checked (true) or only assumed (false).
  bool a_condition_verified = false;
  bool strict = false;  // |K*| < |K|
  bool z_normal = false;
  std::vector<Reason> notes;
};

// Throws Error(HypothesisViolated) when A is not normal in K, when H holds
// no Sylow p-subgroup of K, when K/A fails the Sylow condition, or when the
// condition on A is checked and fails. The condition on A is checked only
// when |A| <= a_budget.
ReducedInstance sylow_section_reduce(const Subgroup& K, const Subgroup& A, const Subgroup& H,
                                     std::uint64_t p, std::size_t a_budget = 1u << 15);

}  // namespace prn
