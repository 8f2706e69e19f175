#include "prn/algebra.hpp"

#include "prn/error.hpp"

namespace prn {

namespace {

Bitset conjugate_members(const Subgroup& H, Index g) {
  const Group& G = H.ambient();
  std::vector<Index> image(H.order());
  G.conj_all(H.elements(), g, image.data());
  Bitset out(G.order());
  for (Index x : image) out.set(x);
  return out;
}

// Marks the right coset C*g.
void mark_coset(const Subgroup& C, Index g, Bitset& marks, std::vector<Index>& buf) {
  buf.resize(C.order());
  C.ambient().right_mul(C.elements(), g, buf.data());
  for (Index x : buf) marks.set(x);
}

}  // namespace

Subgroup conjugate_subgroup(const Subgroup& H, Index g) {
  const Group& G = H.ambient();
  std::vector<Index> gens;
  for (Index h : H.generators()) gens.push_back(G.conj(h, g));
  return Subgroup::generated(H.ambient_ptr(), gens);
}

Subgroup conjugate_subgroup(const Subgroup& H, const Elem& g) {
  return conjugate_subgroup(H, H.ambient().index_of(g));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "join");
  if (a.order() >= b.order()) return extend(a, b.generators()).group;
  return extend(b, a.generators()).group;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b, "intersect");
  Bitset m = a.members();
  m &= b.members();
  return Subgroup::from_members(a.ambient_ptr(), std::move(m));
}

bool normalizes(const Subgroup& H, Index g) {
  const Group& G = H.ambient();
  for (Index h : H.generators())
    if (!H.contains(G.conj(h, g))) return false;
  return true;
}

Subgroup normalizer(const Subgroup& K, const Subgroup& H) {
  require_same_ambient(K, H, "normalizer");
  Subgroup N = intersect(H, K);
  Bitset seen = N.members();
  std::vector<Index> buf;
  for (Index g : K.elements()) {
    if (seen.test(g)) continue;
    if (normalizes(H, g)) {
      const Index one[] = {g};
      N = extend(N, one).group;
      seen |= N.members();
    } else {
      mark_coset(N, g, seen, buf);
    }
  }
  return N;
}

bool is_normal_in(const Subgroup& H, const Subgroup& K) {
  require_same_ambient(H, K, "is_normal_in");
  for (Index k : K.generators())
    if (!normalizes(H, k)) return false;
  return true;
}

namespace {

Subgroup close_under_conjugation(Subgroup C, const std::vector<Index>& by) {
  const Group& G = C.ambient();
  for (std::size_t i = 0; i < C.generators().size(); ++i) {
    for (Index z : by) {
      const Index d = G.conj(C.generators()[i], z);
      if (C.contains(d)) continue;
      const Index one[] = {d};
      C = extend(C, one).group;
    }
  }
  return C;
}

}  // namespace

Subgroup normal_closure(const Subgroup& H, const Subgroup& K) {
  require_same_ambient(H, K, "normal_closure");
  return close_under_conjugation(H, K.generators());
}

Subgroup commutator_subgroup(const Subgroup& X, const Subgroup& Y) {
  require_same_ambient(X, Y, "commutator_subgroup");
  const Group& G = X.ambient();
  std::vector<Index> comms;
  for (Index x : X.generators())
    for (Index y : Y.generators())
      comms.push_back(G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y)));
  std::vector<Index> by = X.generators();
  by.insert(by.end(), Y.generators().begin(), Y.generators().end());
  return close_under_conjugation(Subgroup::generated(X.ambient_ptr(), comms), by);
}

Subgroup center(const Subgroup& K) {
  const Group& G = K.ambient();
  Bitset m(G.order());
  for (Index z : K.elements()) {
    bool central = true;
    for (Index k : K.generators())
      if (G.mul(z, k) != G.mul(k, z)) {
        central = false;
        break;
      }
    if (central) m.set(z);
  }
  return Subgroup::from_members(K.ambient_ptr(), std::move(m));
}

bool is_abelian(const Subgroup& K) {
  const Group& G = K.ambient();
  const auto& gens = K.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (p < 2 || n == 0) throw Error(Errc::InvalidArgument, "p_part needs p >= 2 and n >= 1");
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proven deterministic set below 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Subgroup sylow_p(const Subgroup& K, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "sylow_p: p must be prime");
  const Group& G = K.ambient();
  const std::uint64_t target = p_part(K.order(), p);
  Subgroup P = Subgroup::trivial(K.ambient_ptr());
  while (P.order() < target) {
    const Subgroup N = normalizer(K, P);
    bool grown = false;
    for (Index x : N.elements()) {
      if (P.contains(x)) continue;
      const std::uint64_t ord = G.element_order(x);
      if (!P.contains(G.pow(x, p_part(ord, p)))) continue;
      const Index one[] = {x};
      P = extend(P, one).group;
      grown = true;
      break;
    }
    if (!grown) throw Error(Errc::StructureCheckFailed, "sylow_p: normalizer climb stalled");
  }
  return P;
}

Subgroup p_core(const Subgroup& K, std::uint64_t p) {
  const Subgroup S = sylow_p(K, p);
  const Subgroup N = normalizer(K, S);
  Bitset core = S.members();
  Bitset seen(K.ambient().order());
  std::vector<Index> buf;
  for (Index g : K.elements()) {
    if (seen.test(g)) continue;
    mark_coset(N, g, seen, buf);
    core &= conjugate_members(S, g);
  }
  return Subgroup::from_members(K.ambient_ptr(), std::move(core));
}

bool has_odd_index(const Subgroup& K, const Subgroup& H) {
  require_same_ambient(K, H, "has_odd_index");
  if (!H.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "has_odd_index: H is not in K");
  return (K.order() / H.order()) % 2 == 1;
}

bool in_class_Xp(const Subgroup& K, std::uint64_t p) {
  const Subgroup S = sylow_p(K, p);
  return normalizer(K, S).order() == S.order();
}

}  // namespace prn
