#include "prn/algebra.hpp"
#include "prn/error.hpp"
#include "prn/oracle.hpp"

namespace prn {

ReducedInstance sylow_section_reduce(const Subgroup& K, const Subgroup& A, const Subgroup& H,
                                     std::uint64_t p, std::size_t a_budget) {
  require_same_ambient(K, A, "sylow_section_reduce");
  require_same_ambient(K, H, "sylow_section_reduce");
  if (!A.is_subgroup_of(K) || !H.is_subgroup_of(K))
    throw Error(Errc::HypothesisViolated, "A and H must lie in K");
  if (!is_normal_in(A, K)) throw Error(Errc::HypothesisViolated, "A is not normal in K");

  ReducedInstance r;
  r.S = sylow_p(H, p);
  if (r.S.order() != p_part(K.order(), p))
    throw Error(Errc::HypothesisViolated, "H contains no Sylow " + std::to_string(p) +
                                              "-subgroup of K");
  // SA/A is a Sylow subgroup of K/A with normalizer N_K(SA)/A.
  const Subgroup SA = join(r.S, A);
  if (normalizer(K, SA) != SA)
    throw Error(Errc::HypothesisViolated,
                "K/A does not have self-normalizing Sylow " + std::to_string(p) + "-subgroups");

  r.T = intersect(A, r.S);
  const Subgroup HA = intersect(H, A);
  r.Y = normalizer(A, HA);
  r.Z = normalizer(HA, r.T);
  r.H_star = normalizer(H, r.T);
  r.N_Y_T = normalizer(r.Y, r.T);
  r.K_star = join(r.H_star, r.N_Y_T);

  if (A.order() <= a_budget) {
    const Decision d = overgroups_of_sylow_pronormal(A, p);
    if (d.verdict != Verdict::Pronormal)
      throw Error(Errc::HypothesisViolated,
                  "A has a non-pronormal overgroup of a Sylow " + std::to_string(p) + "-subgroup");
    r.a_condition_verified = true;
    r.notes.push_back({"a_condition_verified", std::nullopt,
                       "every overgroup of a Sylow " + std::to_string(p) +
                           "-subgroup of A is pronormal in A"});
  } else {
    r.notes.push_back({"a_condition_assumed", std::nullopt,
                       "|A| = " + std::to_string(A.order()) +
                           " exceeds the budget; the overgroup condition on A is assumed"});
  }

  r.strict = r.K_star.order() < K.order();
  if (!r.strict)
    r.notes.push_back({"not_strict", std::nullopt, "|K*| = |K|; the reduction does not shrink"});
  r.z_normal = is_normal_in(r.Z, r.H_star) && is_normal_in(r.Z, r.N_Y_T);
  if (!r.z_normal)
    r.notes.push_back({"z_not_normal", std::nullopt, "Z is not normal in both N_H(T) and N_Y(T)"});
  return r;
}

}  // namespace prn
