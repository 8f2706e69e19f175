#include <set>

#include "doctest.h"
#include "prn/error.hpp"
#include "prn/matgrp.hpp"
#include "prn/product.hpp"
#include "prn/quotient.hpp"
#include "support.hpp"

using namespace prn;
using prn::test::cyc;
using prn::test::gen;

namespace {

GroupPtr sym(std::uint32_t n) { return build_symmetric(n); }

Index perm_index(const GroupPtr& G, std::size_t n, std::initializer_list<std::initializer_list<Point>> cycles) {
  return G->index_of(Perm::from_cycles(n, cycles));
}

// Small groups used by the exhaustive invariant checks.
std::vector<GroupPtr> small_corpus() {
  return {sym(3),
          sym(4),
          build_alternating(4),
          build_sp2(3),
          WreathProduct({{{2, 2}}}).group(),
          WreathProduct({{{3, 2}}}).group(),
          WreathProduct({{{3, 3}}}).group()};
}

std::uint64_t count_sl2(std::uint32_t q) {
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d)
          if ((a * d + q * q - b * c) % q == 1) ++n;
  return n;
}

}  // namespace

TEST_CASE("closure") {
  CHECK(closure({Perm::identity(3)})->order() == 1);
  CHECK(closure({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})})->order() == 6);
  // Sp2(3) = SL2(3): every determinant-one matrix, counted directly.
  CHECK(build_sp2(3)->order() == count_sl2(3));
  CHECK(build_sp2(3)->order() == 24);
  CHECK(build_sp2(5)->order() == count_sl2(5));
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(closure({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}, 50), Error);
  try {
    closure({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}, 50);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
  try {
    closure({Elem(cyc(3, {{0, 1}})), Elem(mat_identity(3, 2))});
    FAIL("mixed payloads accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompatiblePayloads);
  }
}

TEST_CASE("elements are sorted by a strictly increasing canonical code") {
  for (const GroupPtr& G : small_corpus()) {
    for (Index i = 1; i < G->order(); ++i) CHECK(G->code(i - 1) < G->code(i));
    for (Index i = 0; i < G->order(); ++i) CHECK(G->code(i) == encode(G->element(i)));
  }
}

TEST_CASE("group axioms hold by exhaustive triple products") {
  for (const GroupPtr& G : small_corpus()) {
    REQUIRE(G->order() <= 200);
    const Index e = G->identity();
    CHECK(G->element(e) == identity_like(G->element(0)));
    for (Index a = 0; a < G->order(); ++a) {
      CHECK(G->mul(a, e) == a);
      CHECK(G->mul(e, a) == a);
      CHECK(G->mul(a, G->inv(a)) == e);
      CHECK(G->element(G->inv(a)) == inverse(G->element(a)));
      for (Index b = 0; b < G->order(); ++b) {
        const Index ab = G->mul(a, b);
        CHECK(G->element(ab) == multiply(G->element(a), G->element(b)));
        for (Index c = 0; c < G->order(); ++c)
          if (G->mul(ab, c) != G->mul(a, G->mul(b, c))) FAIL("not associative in " << G->name());
      }
    }
  }
}

TEST_CASE("conjugate_subgroup") {
  const GroupPtr S3 = sym(3);
  const Subgroup A3 = gen(S3, {perm_index(S3, 3, {{0, 1, 2}})});
  CHECK(conjugate_subgroup(A3, S3->identity()) == A3);
  CHECK(conjugate_subgroup(A3, perm_index(S3, 3, {{0, 1}})) == A3);
  const Subgroup T01 = gen(S3, {perm_index(S3, 3, {{0, 1}})});
  const Subgroup T12 = gen(S3, {perm_index(S3, 3, {{1, 2}})});
  CHECK(conjugate_subgroup(T01, perm_index(S3, 3, {{0, 2}})) == T12);
  CHECK(conjugate_subgroup(T01, Elem(cyc(3, {{0, 2}}))) == T12);
  try {
    conjugate_subgroup(T01, Elem(cyc(4, {{0, 2}})));
    FAIL("foreign element accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ElementNotInAmbient);
  }
}

TEST_CASE("conjugation preserves order and odd index") {
  for (const GroupPtr& G : small_corpus()) {
    const Subgroup whole = Subgroup::whole(G);
    for (const Subgroup& H : all_subgroups(whole))
      for (Index g = 0; g < G->order(); g += 3) {
        const Subgroup C = conjugate_subgroup(H, g);
        CHECK(C.order() == H.order());
        CHECK(has_odd_index(whole, C) == has_odd_index(whole, H));
        CHECK(test::member_mask(C) == test::naive_conjugate(*G, H.elements(), g));
      }
  }
}

TEST_CASE("join") {
  const GroupPtr S3 = sym(3);
  const Subgroup T01 = gen(S3, {perm_index(S3, 3, {{0, 1}})});
  const Subgroup T12 = gen(S3, {perm_index(S3, 3, {{1, 2}})});
  CHECK(join(T01, T01) == T01);
  CHECK(join(T01, T12).order() == 6);
  const GroupPtr S4 = sym(4);
  const Subgroup a = gen(S4, {perm_index(S4, 4, {{0, 1}, {2, 3}})});
  const Subgroup b = gen(S4, {perm_index(S4, 4, {{0, 2}, {1, 3}})});
  const Subgroup v4 = join(a, b);
  CHECK(v4.order() == 4);
  CHECK(v4.contains(perm_index(S4, 4, {{0, 3}, {1, 2}})));
  try {
    join(T01, a);
    FAIL("different ambients accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AmbientMismatch);
  }
}

TEST_CASE("normalizer") {
  const GroupPtr S4 = sym(4);
  const Subgroup whole = Subgroup::whole(S4);
  const Subgroup A4 = gen(S4, {perm_index(S4, 4, {{0, 1, 2}}), perm_index(S4, 4, {{1, 2, 3}})});
  CHECK(normalizer(whole, A4) == whole);
  const Subgroup P = sylow_p(whole, 2);
  CHECK(normalizer(whole, P) == P);
  CHECK(P.order() == 8);

  const GroupPtr A5 = build_alternating(5);
  const Subgroup WA5 = Subgroup::whole(A5);
  const Subgroup V4 = gen(A5, {perm_index(A5, 5, {{0, 1}, {2, 3}}), perm_index(A5, 5, {{0, 2}, {1, 3}})});
  const Subgroup N = normalizer(WA5, V4);
  CHECK(N.order() == 12);
  CHECK(N.order() / V4.order() == 3);

  // Against the full brute-force scan on every subgroup of the corpus.
  for (const GroupPtr& G : small_corpus()) {
    const Subgroup W = Subgroup::whole(G);
    for (const Subgroup& H : all_subgroups(W)) CHECK(normalizer(W, H).elements() == test::naive_normalizer(W, H));
  }
}

TEST_CASE("commutator_subgroup") {
  const WreathProduct W3({{{3, 3}}});
  CHECK(commutator_subgroup(W3.complement(), Subgroup::trivial(W3.group())).order() == 1);
  CHECK(commutator_subgroup(W3.complement(), W3.base()) == W3.v_minus(0));
  CHECK(W3.v_minus(0).order() == 9);
  const WreathProduct W2({{{3, 2}}});
  CHECK(commutator_subgroup(W2.complement(), W2.base()) == W2.v_minus(0));
  CHECK(W2.v_minus(0).order() == 3);
}

TEST_CASE("sylow_p") {
  CHECK(sylow_p(Subgroup::whole(sym(3)), 2).order() == 2);
  const GroupPtr Sp = build_sp2(3);
  const Subgroup Q = sylow_p(Subgroup::whole(Sp), 2);
  CHECK(Q.order() == 8);
  // Quaternion: a single involution.
  std::size_t involutions = 0;
  for (Index x : Q.elements()) involutions += Sp->element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(sylow_p(Subgroup::whole(WreathProduct({{{3, 3}}}).group()), 2).order() == 2);
  CHECK(sylow_p(Subgroup::whole(sym(3)), 5).order() == 1);
}

TEST_CASE("sylow_p has the full p-part on the corpus and is deterministic") {
  std::vector<GroupPtr> corpus = small_corpus();
  corpus.push_back(build_alternating(5));
  corpus.push_back(build_psl2_7());
  corpus.push_back(sym(5));
  corpus.push_back(WreathProduct({{{3, 2}, {3, 3}}}).group());
  for (const GroupPtr& G : corpus) {
    const Subgroup W = Subgroup::whole(G);
    for (std::uint64_t p : prime_divisors(G->order())) {
      const Subgroup P = sylow_p(W, p);
      CHECK(P.order() == p_part(G->order(), p));
      CHECK(sylow_p(W, p) == P);
      for (Index x : P.generators()) CHECK(p_part(G->element_order(x), p) == G->element_order(x));
    }
  }
}

TEST_CASE("p_core") {
  CHECK(p_core(Subgroup::whole(sym(3)), 2).order() == 1);
  const GroupPtr Sp = build_sp2(3);
  CHECK(p_core(Subgroup::whole(Sp), 2).order() == 8);
  const WreathProduct W({{{3, 3}}});
  const Subgroup O3 = p_core(W.whole(), 3);
  CHECK(O3.order() == 81);
  CHECK(W.base().is_subgroup_of(O3));
  CHECK(O3 != W.base());
  const Subgroup rot = gen(W.group(), {test::at(W, {0, 0, 0}, {1, 2, 0})});
  CHECK(O3 == join(W.base(), rot));
}

TEST_CASE("p_core is normal and inside every Sylow subgroup") {
  for (const GroupPtr& G : small_corpus()) {
    const Subgroup W = Subgroup::whole(G);
    for (std::uint64_t p : prime_divisors(G->order())) {
      const Subgroup O = p_core(W, p);
      CHECK(is_normal_in(O, W));
      const Subgroup P = sylow_p(W, p);
      for (Index g = 0; g < G->order(); ++g) CHECK(O.is_subgroup_of(conjugate_subgroup(P, g)));
    }
  }
}

TEST_CASE("quotient") {
  const GroupPtr S3 = sym(3);
  const Subgroup A3 = gen(S3, {perm_index(S3, 3, {{0, 1, 2}})});
  CHECK(quotient(S3, A3).group->order() == 2);

  const GroupPtr Sp = build_sp2(3);
  const QuotientGroup Q = quotient(Sp, p_core(Subgroup::whole(Sp), 2));
  CHECK(Q.group->order() == 3);
  bool cyclic = false;
  for (Index x = 0; x < 3; ++x) cyclic |= Q.group->element_order(x) == 3;
  CHECK(cyclic);

  const WreathProduct W({{{3, 3}}});
  const QuotientGroup QW = quotient(W.group(), W.v_minus(0));
  CHECK(QW.group->order() == 18);

  const Subgroup T = gen(S3, {perm_index(S3, 3, {{0, 1}})});
  try {
    quotient(S3, T);
    FAIL("non-normal kernel accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotNormal);
  }
}

TEST_CASE("quotient invariants") {
  for (const GroupPtr& G : small_corpus()) {
    const Subgroup W = Subgroup::whole(G);
    for (const Subgroup& N : all_subgroups(W)) {
      if (!is_normal_in(N, W)) continue;
      const QuotientGroup Q = quotient(G, N);
      CHECK(Q.group->order() * N.order() == G->order());
      // Labels are the least elements of their cosets.
      for (Index q = 0; q < Q.group->order(); ++q) {
        const Index r = Q.reps[q];
        for (Index n : N.elements()) CHECK(G->mul(n, r) >= r);
      }
      for (Index a = 0; a < G->order(); ++a)
        for (Index b : G->generator_indices())
          CHECK(Q.project(G->mul(a, b)) == Q.group->mul(Q.project(a), Q.project(b)));
      CHECK(Q.preimage(Q.image(N)) == N);
    }
  }
}

TEST_CASE("has_odd_index") {
  const GroupPtr S4 = sym(4);
  const Subgroup W = Subgroup::whole(S4);
  CHECK(has_odd_index(W, W));
  const Subgroup A4 = gen(S4, {perm_index(S4, 4, {{0, 1, 2}}), perm_index(S4, 4, {{1, 2, 3}})});
  CHECK_FALSE(has_odd_index(W, A4));
  const WreathProduct Z({{{3, 3}}});
  CHECK(has_odd_index(Z.whole(), Z.complement()));
}

TEST_CASE("overgroups_of") {
  const GroupPtr S4 = sym(4);
  const Subgroup W4 = Subgroup::whole(S4);
  const Subgroup P = sylow_p(W4, 2);
  const auto o4 = overgroups_of(P, W4);
  REQUIRE(o4.size() == 2);
  CHECK(o4[0] == P);
  CHECK(o4[1] == W4);

  const WreathProduct Z({{{3, 3}}});
  const Subgroup S = sylow_p(Z.whole(), 2);
  const auto oz = overgroups_of(S, Z.whole());
  const auto has = [&](const Subgroup& H) { return std::find(oz.begin(), oz.end(), H) != oz.end(); };
  CHECK(has(S));
  CHECK(has(join(S, Z.v_plus(0))));
  CHECK(join(S, Z.v_plus(0)).order() == 6);
  CHECK(has(Z.whole()));
  // B V- for the complement conjugate that contains S.
  std::size_t bv = 0;
  for (const Subgroup& H : oz) bv += H.order() == 54 && Z.v_minus(0).is_subgroup_of(H);
  CHECK(bv >= 1);
  for (std::size_t i = 1; i < oz.size(); ++i)
    CHECK((oz[i - 1].order() < oz[i].order() ||
           (oz[i - 1].order() == oz[i].order() && oz[i - 1].elements() < oz[i].elements())));

  // Independent count: close S with every pair of extra elements.
  std::set<std::vector<char>> naive;
  const Group& G = *Z.group();
  for (Index a = 0; a < G.order(); ++a)
    for (Index b = a; b < G.order(); ++b) {
      std::vector<Index> gens(S.generators());
      gens.push_back(a);
      gens.push_back(b);
      naive.insert(test::naive_closure(G, gens));
    }
  CHECK(naive.size() == oz.size());
  for (const Subgroup& H : oz) CHECK(naive.count(test::member_mask(H)) == 1);

  const auto og = overgroups_of(Z.whole(), Z.whole());
  REQUIRE(og.size() == 1);
  CHECK(og[0] == Z.whole());
  CHECK_THROWS_AS(overgroups_of(Subgroup::trivial(Z.group()), Z.whole(), 3), Error);
}

TEST_CASE("in_class_Xp") {
  CHECK(in_class_Xp(Subgroup::whole(sym(4)), 2));
  CHECK_FALSE(in_class_Xp(Subgroup::whole(build_sp2(3)), 2));
  CHECK_FALSE(in_class_Xp(Subgroup::whole(build_alternating(5)), 2));
}

TEST_CASE("direct_product") {
  const GroupPtr S3 = sym(3);
  CHECK(direct_product({S3}).group->order() == 6);
  const DirectProduct D = direct_product({S3, S3});
  CHECK(D.group->order() == 36);
  const GroupPtr A5 = build_alternating(5);
  const DirectProduct A = direct_product({A5, A5});
  CHECK(A.group->order() == 3600);
  for (std::size_t i = 0; i < 2; ++i)
    for (Index x = 0; x < D.group->order(); ++x)
      for (Index y : D.group->generator_indices())
        CHECK(D.project(i, D.group->mul(x, y)) == S3->mul(D.project(i, x), D.project(i, y)));
  for (Index y = 0; y < 6; ++y) CHECK(D.project(1, D.embed(1, y)) == y);
  CHECK(D.component(0).order() == 6);
  CHECK_THROWS_AS(direct_product({A5, A5, A5}, 1000), Error);
}

TEST_CASE("Lagrange holds for every enumerated subgroup") {
  for (const GroupPtr& G : small_corpus())
    for (const Subgroup& H : all_subgroups(Subgroup::whole(G))) CHECK(G->order() % H.order() == 0);
}

TEST_CASE("all_subgroups matches closures of element pairs on two-generated groups") {
  for (const GroupPtr& G : {sym(3), sym(4), build_alternating(4), build_sp2(3)}) {
    const Subgroup W = Subgroup::whole(G);
    const auto subs = all_subgroups(W);
    const auto naive = test::naive_two_generated(W);
    CHECK(subs.size() == naive.size());
  }
}
