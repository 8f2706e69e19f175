#include "prn/algebra.hpp"
#include "prn/criteria.hpp"
#include "prn/error.hpp"

namespace prn {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pronormal: return "Pronormal";
    case Verdict::NotPronormal: return "NotPronormal";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

Decision decide_wreath_product(const WreathProduct& W, const Subgroup& K, const Subgroup& H) {
  if (H.ambient_ptr() != W.group() || K.ambient_ptr() != W.group())
    throw Error(Errc::AmbientMismatch, "decide_wreath_product: subgroups of another group");

  Decision d;
  if (!H.is_subgroup_of(K)) {
    d.because("not_a_subgroup", "H is not contained in K");
    return d;
  }
  if ((W.group()->order() / H.order()) % 2 == 0) {
    d.because("even_index", "|G : H| = " + std::to_string(W.group()->order() / H.order()) +
                                " is even");
    return d;
  }
  for (std::size_t i = 0; i < W.factor_count(); ++i) {
    const std::uint64_t got = W.bar_image_order(i, H);
    const std::uint64_t want = factorial(W.spec().factors[i].n);
    if (got != want) {
      d.because("proper_top_projection",
                "bar(pi_" + std::to_string(i + 1) + "(H)) has order " + std::to_string(got) +
                    ", not " + std::to_string(want),
                i);
    }
  }
  if (!d.reasons.empty()) return d;

  d.verdict = Verdict::Pronormal;
  for (std::size_t i = 0; i < W.factor_count(); ++i) {
    const WreathFactor f = W.spec().factors[i];
    const std::string pi = "pi_" + std::to_string(i + 1);
    const Subgroup PK = W.project(i, K);
    if (PK.order() != W.factor(i)->order()) {
      d.because("proper_projection_of_K", pi + "(K) is a proper subgroup of G_" + std::to_string(i + 1), i);
      continue;
    }
    if (f.n == 1) {
      d.because("trivial_top", "n = 1", i);
      continue;
    }
    if (f.p == 2) {
      d.because("even_prime_factor", "p = 2: self-normalizing Sylow 2-subgroups", i);
      continue;
    }
    if (f.n % f.p != 0) {
      d.because("coprime_degree", "p = " + std::to_string(f.p) + " does not divide n = " +
                                      std::to_string(f.n), i);
      continue;
    }
    const Subgroup PH = W.project(i, H);
    const Subgroup Vm = W.factor_v_minus(i);
    bool contained = true;
    for (Index g : Vm.generators())
      if (!PH.contains(g)) contained = false;
    if (contained) {
      d.because("contains_sum_zero", "V- <= " + pi + "(H)", i);
      continue;
    }
    d.verdict = Verdict::NotPronormal;
    d.because("sum_zero_missing", "V- is not contained in " + pi + "(H)", i);
  }
  return d;
}

}  // namespace prn
