#include <unordered_set>

#include "prn/algebra.hpp"
#include "prn/criteria.hpp"
#include "prn/error.hpp"
#include "prn/matgrp.hpp"

namespace prn {

namespace {

constexpr Index kNone = ~Index{0};

[[noreturn]] void structure_failure(const std::string& what) {
  throw Error(Errc::StructureCheckFailed, what);
}

std::size_t distinct_tops(const GenericWreath& M, const Subgroup& H) {
  std::unordered_set<std::uint64_t> tops;
  for (Index x : H.elements()) tops.insert(M.top(x).rank());
  return tops.size();
}

}  // namespace

Subgroup CyclicSectionMap::transport(const Subgroup& H) const {
  if (H.ambient_ptr() != M->group()) throw Error(Errc::AmbientMismatch, "transport: H is not in M");
  if (!H.is_subgroup_of(domain)) throw Error(Errc::InvalidArgument, "transport: H leaves the domain");
  std::vector<Index> gens;
  for (Index h : H.generators()) gens.push_back(to_target[h]);
  return Subgroup::generated(target->group(), gens);
}

CyclicSectionMap cyclic_section_map(std::shared_ptr<const GenericWreath> M, const Subgroup& Q,
                                    const Subgroup& P) {
  const GroupPtr& L = M->base();
  if (Q.ambient_ptr() != L || P.ambient_ptr() != L)
    throw Error(Errc::AmbientMismatch, "cyclic_section_map: Q and P must be subgroups of the base");
  if (!P.is_subgroup_of(Q) || !is_normal_in(P, Q)) structure_failure("P is not normal in Q");
  const std::size_t r = Q.order() / P.order();
  if (!is_prime(r)) structure_failure("|Q/P| = " + std::to_string(r) + " is not prime");

  CyclicSectionMap m;
  m.M = M;
  m.r = static_cast<std::uint32_t>(r);
  m.label.assign(L->order(), -1);
  Index t = kNone;
  for (Index x : Q.elements())
    if (!P.contains(x)) {
      t = x;
      break;
    }
  std::vector<Index> buf(P.order());
  Index power = L->identity();
  for (std::size_t k = 0; k < r; ++k) {
    L->right_mul(P.elements(), power, buf.data());
    for (Index x : buf) m.label[x] = static_cast<int>(k);
    power = L->mul(power, t);
  }

  const std::uint32_t n = M->degree();
  m.target = std::make_shared<const WreathProduct>(WreathGroupSpec{{{m.r, n}}});
  m.domain = M->wreath_of(Q);
  m.kernel = M->base_power(P);
  const Group& G = *M->group();
  const Group& target = *m.target->group();
  m.to_target.assign(G.order(), kNone);
  for (Index x : m.domain.elements()) {
    const auto& e = G.element(x).as<BaseWreathElem>();
    WreathElem w{m.r, std::vector<std::uint32_t>(n), e.top};
    for (std::uint32_t i = 0; i < n; ++i) {
      const int lab = m.label[L->index_of(e.base[i])];
      if (lab < 0) structure_failure("domain element with a slot outside Q");
      w.v[i] = static_cast<std::uint32_t>(lab);
    }
    m.to_target[x] = m.target->element({w});
  }

  // A map that respects right multiplication by every generator is a
  // homomorphism on the generated group.
  for (Index x : m.domain.elements())
    for (Index g : m.domain.generators())
      if (m.to_target[G.mul(x, g)] != target.mul(m.to_target[x], m.to_target[g]))
        structure_failure("section map is not a homomorphism");
  std::size_t kernel_size = 0;
  std::unordered_set<Index> image;
  for (Index x : m.domain.elements()) {
    image.insert(m.to_target[x]);
    if (m.to_target[x] == target.identity()) {
      if (!m.kernel.contains(x)) structure_failure("kernel is larger than P^n");
      ++kernel_size;
    }
  }
  if (kernel_size != m.kernel.order()) structure_failure("kernel is smaller than P^n");
  if (image.size() != target.order()) structure_failure("section map is not onto Z_r wr Sym_n");
  return m;
}

CoreQuotient o2_epimorphism(std::shared_ptr<const GenericWreath> M) {
  const GroupPtr& L = M->base();
  const Subgroup base_core = p_core(Subgroup::whole(L), 2);
  CoreQuotient E;
  E.core = p_core(Subgroup::whole(M->group()), 2);
  if (E.core != M->base_power(base_core)) structure_failure("O_2(M) differs from O_2(L)^n");
  E.map = cyclic_section_map(M, Subgroup::whole(L), base_core);
  if (E.map.domain.order() != M->group()->order()) structure_failure("section map is not defined on M");
  E.quotient = quotient(M->group(), E.core);
  E.iso.resize(E.quotient.group->order());
  std::unordered_set<Index> seen;
  for (Index q = 0; q < E.quotient.group->order(); ++q) {
    E.iso[q] = E.map.to_target[E.quotient.reps[q]];
    if (!seen.insert(E.iso[q]).second) structure_failure("quotient map is not injective");
  }
  if (seen.size() != E.map.target->group()->order()) structure_failure("quotient map is not onto");
  const Group& Q = *E.quotient.group;
  const Group& T = *E.map.target->group();
  for (Index a : Q.generator_indices())
    for (Index b : Q.generator_indices())
      if (E.iso[Q.mul(a, b)] != T.mul(E.iso[a], E.iso[b]))
        structure_failure("quotient map is not a homomorphism");
  return E;
}

Decision symplectic_wreath_pipeline(const CoreQuotient& E, const Subgroup& H) {
  const GenericWreath& M = *E.map.M;
  if (H.ambient_ptr() != M.group()) throw Error(Errc::AmbientMismatch, "pipeline: H is not in M");
  const std::size_t index = M.group()->order() / H.order();
  Decision na = make_decision(Verdict::NotApplicable);
  if (index % 2 == 0) return na.because("even_index", "|M : H| = " + std::to_string(index) + " is even");
  const std::size_t tops = distinct_tops(M, H);
  if (tops != factorial(M.degree()))
    return na.because("reducible_branch",
                      "bar(H) has order " + std::to_string(tops) +
                          "; H preserves a block decomposition, a case this pipeline does not decide");

  const Subgroup image = E.map.transport(H);
  const Decision inner = decide_wreath_product(*E.map.target, E.map.target->whole(), image);
  Decision d = make_decision(inner.verdict);
  d.because("core_quotient", "|O_2(M)| = " + std::to_string(E.core.order()) +
                                 ", image of H in Z_3 wr Sym_n has order " +
                                 std::to_string(image.order()));
  for (const Reason& r : inner.reasons) d.reasons.push_back(r);
  d.because("ambient_note",
            "the ambient group is M = Sp2(3) wr Sym_n; passing from the full symplectic group to M "
            "is taken as given");
  return d;
}

WreathNormalizerReport sylow_normalizer_wreath_structure(GroupPtr L, std::uint32_t n,
                                                         std::uint64_t p, std::size_t cap) {
  auto M = std::make_shared<const GenericWreath>(L, n, cap);
  const Subgroup WL = Subgroup::whole(L);
  const Subgroup P = sylow_p(WL, p);
  const Subgroup NLP = normalizer(WL, P);

  const Subgroup whole = Subgroup::whole(M->group());
  const Subgroup S = join(M->base_power(P), sylow_p(M->top_subgroup(), p));
  if (S.order() != p_part(whole.order(), p)) structure_failure("assembled subgroup is not Sylow");
  const Subgroup T = intersect(M->base_subgroup(), S);
  const Subgroup N = normalizer(whole, T);

  WreathNormalizerReport rep;
  rep.order_P = P.order();
  rep.order_NL_P = NLP.order();
  rep.order_T = T.order();
  rep.order_N = N.order();
  rep.quotient_order = N.order() / T.order();

  rep.t_is_product_of_sylows = true;
  Subgroup product = Subgroup::trivial(M->group());
  for (std::uint32_t i = 0; i < n; ++i) {
    const Subgroup Ti = intersect(T, M->slot(i));
    if (Ti.order() != P.order()) rep.t_is_product_of_sylows = false;
    product = join(product, Ti);
  }
  if (product != T) rep.t_is_product_of_sylows = false;
  rep.normalizer_is_wreath = N == M->wreath_of(NLP);

  std::uint64_t nl_pow = 1, section_pow = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    nl_pow *= NLP.order();
    section_pow *= NLP.order() / P.order();
  }
  rep.order_formula = N.order() == nl_pow * factorial(n) &&
                      rep.quotient_order == section_pow * factorial(n);

  const std::size_t r = NLP.order() / P.order();
  if (is_prime(r)) {
    rep.cyclic_order = static_cast<std::uint32_t>(r);
    try {
      const CyclicSectionMap m = cyclic_section_map(M, NLP, P);
      rep.cyclic_wreath_isomorphism = m.domain == N && m.kernel == T;
    } catch (const Error& e) {
      if (e.code() != Errc::StructureCheckFailed) throw;
      rep.cyclic_wreath_isomorphism = false;
    }
  }
  return rep;
}

}  // namespace prn
