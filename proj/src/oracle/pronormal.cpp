#include <algorithm>
#include <unordered_map>

#include "prn/action.hpp"
#include "prn/algebra.hpp"
#include "prn/error.hpp"
#include "prn/oracle.hpp"

namespace prn {

namespace {

std::pair<std::uint64_t, std::uint64_t> set_key(const Bitset& b) {
  std::uint64_t h2 = 0x6A09E667F3BCC909ull ^ b.size();
  const auto& words = b.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i] + 0xD1B54A32D192ED03ull * (i + 1);
    w ^= w >> 31;
    w *= 0x94D049BB133111EBull;
    h2 += w ^ (w >> 29);
  }
  return {b.hash(), h2};
}

Bitset conjugate_members(const Subgroup& H, Index g, std::vector<Index>& buf) {
  const Group& G = H.ambient();
  buf.resize(H.order());
  G.conj_all(H.elements(), g, buf.data());
  Bitset out(G.order());
  for (Index x : buf) out.set(x);
  return out;
}

// Whether H and X = H^g are conjugate inside <H, X>: look for a right coset
// representative r of H in the join with H^r = X.
bool conjugate_in_join(const Subgroup& H, Index g, const Bitset& X) {
  const Group& G = H.ambient();
  std::vector<Index> xgens;
  for (Index h : H.generators()) xgens.push_back(G.conj(h, g));
  const Extension J = extend(H, xgens, std::numeric_limits<std::size_t>::max(), true);
  for (Index r : J.coset_reps) {
    bool match = true;
    for (Index h : H.generators())
      if (!X.test(G.conj(h, r))) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

Decision scan_conjugates(const Subgroup& H, const Subgroup& K, const Subgroup& domain,
                         OracleCache* cache) {
  const Group& G = H.ambient();
  const Subgroup NK = cache ? intersect(cache->ambient_normalizer(H), K) : normalizer(K, H);
  const Subgroup ND = intersect(NK, domain);
  Bitset visited(G.order());
  std::vector<Index> buf(ND.order());
  std::vector<Index> conj_buf;
  std::size_t conjugates = 0;
  for (Index g : domain.elements()) {
    if (visited.test(g)) continue;
    G.right_mul(ND.elements(), g, buf.data());
    for (Index x : buf) visited.set(x);
    const Bitset X = conjugate_members(H, g, conj_buf);
    if (X == H.members()) continue;
    ++conjugates;
    std::optional<bool> joined = cache ? cache->pair(H, X) : std::nullopt;
    if (!joined) {
      joined = conjugate_in_join(H, g, X);
      if (cache) cache->store_pair(H, X, *joined);
    }
    if (!*joined) {
      Decision d = make_decision(Verdict::NotPronormal);
      d.because("conjugate_not_joined", "H and H^g are not conjugate in <H, H^g>");
      d.witnesses.push_back(G.element(g));
      return d;
    }
  }
  Decision d = make_decision(Verdict::Pronormal);
  d.because("every_conjugate_joined",
            std::to_string(conjugates) + " distinct conjugates checked, |N(H)| = " +
                std::to_string(NK.order()));
  return d;
}

}  // namespace

const Subgroup& OracleCache::ambient_normalizer(const Subgroup& H) {
  const Key key = set_key(H.members());
  auto it = normalizers_.find(key);
  if (it != normalizers_.end()) {
    ++normalizer_hits;
    return it->second;
  }
  return normalizers_.emplace(key, normalizer(Subgroup::whole(H.ambient_ptr()), H)).first->second;
}

std::optional<bool> OracleCache::pair(const Subgroup& H, const Bitset& X) const {
  auto it = pairs_.find({set_key(H.members()), set_key(X)});
  if (it == pairs_.end()) return std::nullopt;
  const_cast<OracleCache*>(this)->pair_hits++;
  return it->second;
}

void OracleCache::store_pair(const Subgroup& H, const Bitset& X, bool joined) {
  pairs_[{set_key(H.members()), set_key(X)}] = joined;
}

Decision pronormal_by_definition(const Subgroup& H, const Subgroup& K, OracleCache* cache) {
  require_same_ambient(H, K, "pronormal_by_definition");
  if (!H.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "pronormal_by_definition: H is not in K");
  return scan_conjugates(H, K, K, cache);
}

Decision pronormal_via_sylow_normalizer(const Subgroup& H, const Subgroup& K, const Subgroup& S,
                                        OracleCache* cache) {
  require_same_ambient(H, K, "pronormal_via_sylow_normalizer");
  require_same_ambient(S, K, "pronormal_via_sylow_normalizer");
  if (!H.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "H is not in K");
  if (!S.is_subgroup_of(H)) throw Error(Errc::SylowNotContained, "S is not contained in H");
  const auto primes = prime_divisors(S.order());
  const bool sylow = primes.empty()
                         ? true
                         : primes.size() == 1 && p_part(K.order(), primes[0]) == S.order();
  if (!sylow) throw Error(Errc::InvalidArgument, "S is not a Sylow subgroup of K");
  return scan_conjugates(H, K, normalizer(K, S), cache);
}

std::vector<Subgroup> invariant_subgroups(const Subgroup& V, const Subgroup& H, std::size_t budget) {
  require_same_ambient(V, H, "invariant_subgroups");
  const Group& G = V.ambient();
  std::vector<Subgroup> found{Subgroup::trivial(V.ambient_ptr())};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash{{found[0].fingerprint(), {0}}};
  std::vector<Index> buf;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup U = found[i];
    Bitset tried = U.members();
    buf.resize(U.order());
    for (Index v : V.elements()) {
      if (tried.test(v)) continue;
      G.right_mul(U.elements(), v, buf.data());
      for (Index x : buf) tried.set(x);
      const Index one[] = {v};
      Subgroup W = normal_closure(extend(U, one).group, H);
      if (!W.is_subgroup_of(V)) continue;
      auto& bucket = by_hash[W.fingerprint()];
      if (std::any_of(bucket.begin(), bucket.end(), [&](std::size_t k) { return found[k] == W; }))
        continue;
      if (found.size() >= budget) throw Error(Errc::BudgetExceeded, "too many invariant subgroups");
      bucket.push_back(found.size());
      found.push_back(std::move(W));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

Decision pronormal_via_abelian_supplement(const Subgroup& H, const Subgroup& V, const Subgroup& K,
                                          std::size_t v_cap) {
  require_same_ambient(H, K, "pronormal_via_abelian_supplement");
  require_same_ambient(V, K, "pronormal_via_abelian_supplement");
  Decision na = make_decision(Verdict::NotApplicable);
  if (!H.is_subgroup_of(K) || !V.is_subgroup_of(K))
    return na.because("hypothesis_violated", "H and V must lie in K");
  if (!is_abelian(V)) return na.because("hypothesis_violated", "V is not abelian");
  if (!is_normal_in(V, K)) return na.because("hypothesis_violated", "V is not normal in K");
  const std::size_t hv = H.order() * V.order() / intersect(H, V).order();
  if (hv != K.order())
    return na.because("hypothesis_violated",
                      "|HV| = " + std::to_string(hv) + " differs from |K| = " + std::to_string(K.order()));
  if (V.order() > v_cap)
    throw Error(Errc::BudgetExceeded, "|V| = " + std::to_string(V.order()) + " exceeds the cap " +
                                          std::to_string(v_cap));

  const Subgroup NKH = normalizer(K, H);
  const std::vector<Subgroup> us = invariant_subgroups(V, H);
  for (const Subgroup& U : us) {
    const Subgroup generated = join(intersect(U, NKH), commutator_subgroup(H, U));
    if (generated == U) continue;
    Decision d = make_decision(Verdict::NotPronormal);
    d.because("invariant_subgroup_not_generated",
              "H-invariant U <= V of order " + std::to_string(U.order()) +
                  " has N_U(H)[H, U] of order " + std::to_string(generated.order()));
    for (Index u : U.generators()) d.witnesses.push_back(U.ambient().element(u));
    return d;
  }
  Decision d = make_decision(Verdict::Pronormal);
  d.because("all_invariant_subgroups_generated",
            std::to_string(us.size()) + " H-invariant subgroups of V satisfy U = N_U(H)[H, U]");
  return d;
}

Decision hall_permutation_check(const Subgroup& H, const Subgroup& K,
                                const std::vector<Subgroup>& Ls, bool complete) {
  require_same_ambient(H, K, "hall_permutation_check");
  if (!H.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "hall_permutation_check: H is not in K");
  const Subgroup N = normalizer(K, H);
  for (std::size_t li = 0; li < Ls.size(); ++li) {
    const CosetAction action = coset_action(K, Ls[li]);
    std::vector<Point> fixed;
    for (Point c = 0; c < action.degree(); ++c) {
      bool is_fixed = true;
      for (Index h : H.generators())
        if (action.act(c, h) != c) {
          is_fixed = false;
          break;
        }
      if (is_fixed) fixed.push_back(c);
    }
    if (fixed.size() <= 1) continue;
    std::vector<char> reached(action.degree(), 0);
    std::vector<Point> queue{fixed.front()};
    reached[fixed.front()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Index n : N.generators()) {
        const Point y = action.act(queue[i], n);
        if (!reached[y]) {
          reached[y] = 1;
          queue.push_back(y);
        }
      }
    if (queue.size() != fixed.size()) {
      Decision d = make_decision(Verdict::NotPronormal);
      d.because("normalizer_not_transitive_on_fixed_points",
                "on the " + std::to_string(action.degree()) + " cosets of subgroup #" +
                    std::to_string(li) + ", N(H) has an orbit of length " +
                    std::to_string(queue.size()) + " on " + std::to_string(fixed.size()) +
                    " fixed points of H");
      for (Index g : Ls[li].generators()) d.witnesses.push_back(K.ambient().element(g));
      return d;
    }
  }
  if (complete) {
    Decision d = make_decision(Verdict::Pronormal);
    d.because("transitive_on_fixed_points",
              "all " + std::to_string(Ls.size()) + " coset actions pass");
    return d;
  }
  Decision d = make_decision(Verdict::NotApplicable);
  d.because("partial", std::to_string(Ls.size()) +
                           " coset actions pass, but the list does not cover every subgroup class");
  return d;
}

Decision overgroups_of_sylow_pronormal(const Subgroup& K, std::uint64_t p, std::size_t budget) {
  const Subgroup S = sylow_p(K, p);
  const std::vector<Subgroup> overs = overgroups_of(S, K, budget);
  OracleCache cache;
  for (const Subgroup& H : overs) {
    const Decision d = pronormal_via_sylow_normalizer(H, K, S, &cache);
    if (d.verdict == Verdict::NotPronormal) {
      Decision out = make_decision(Verdict::NotPronormal);
      out.because("overgroup_not_pronormal",
                  "an overgroup of order " + std::to_string(H.order()) + " is not pronormal");
      for (Index g : H.generators()) out.witnesses.push_back(K.ambient().element(g));
      return out;
    }
  }
  Decision out = make_decision(Verdict::Pronormal);
  out.because("all_overgroups_pronormal",
              std::to_string(overs.size()) + " overgroups of a Sylow " + std::to_string(p) +
                  "-subgroup are pronormal");
  return out;
}

}  // namespace prn
