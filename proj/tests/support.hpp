#pragma once

// Test helpers: element builders and brute-force reference implementations
// that share no code with the library algorithms beyond Group::mul/inv.

#include <algorithm>
#include <set>
#include <vector>

#include "prn/algebra.hpp"
#include "prn/group.hpp"
#include "prn/subgroup.hpp"
#include "prn/wreath.hpp"

namespace prn::test {

inline Perm cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> cycles) {
  return Perm::from_cycles(n, cycles);
}

inline WreathElem wr(std::uint32_t p, std::vector<std::uint32_t> v, std::vector<Point> s) {
  return WreathElem{p, std::move(v), Perm(std::move(s))};
}

// Index of a single-factor wreath element.
inline Index at(const WreathProduct& W, std::vector<std::uint32_t> v, std::vector<Point> s) {
  return W.element({wr(W.spec().factors[0].p, std::move(v), std::move(s))});
}

inline Subgroup gen(const GroupPtr& G, std::vector<Index> gens) {
  return Subgroup::generated(G, gens);
}

inline Subgroup gen_elems(const GroupPtr& G, const std::vector<Elem>& gens) {
  return Subgroup::generated(G, gens);
}

// Closure of a generating set by breadth-first multiplication.
inline std::vector<char> naive_closure(const Group& G, const std::vector<Index>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Index> queue{G.identity()};
  in[G.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Index g : gens) {
      const Index y = G.mul(queue[i], g);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  return in;
}

inline std::vector<char> member_mask(const Subgroup& H) {
  std::vector<char> m(H.ambient().order(), 0);
  for (Index h : H.elements()) m[h] = 1;
  return m;
}

inline std::vector<char> naive_conjugate(const Group& G, const std::vector<Index>& elems, Index g) {
  std::vector<char> m(G.order(), 0);
  const Index gi = G.inv(g);
  for (Index h : elems) m[G.mul(G.mul(gi, h), g)] = 1;
  return m;
}

inline std::vector<Index> naive_normalizer(const Subgroup& K, const Subgroup& H) {
  const Group& G = K.ambient();
  const auto mask = member_mask(H);
  std::vector<Index> out;
  for (Index g : K.elements())
    if (naive_conjugate(G, H.elements(), g) == mask) out.push_back(g);
  return out;
}

// The definition read literally: for every g in K, H and H^g are conjugate
// by some element of <H, H^g>.
inline bool naive_pronormal(const Subgroup& H, const Subgroup& K) {
  const Group& G = K.ambient();
  const auto mask = member_mask(H);
  std::set<std::vector<char>> done;
  for (Index g : K.elements()) {
    auto X = naive_conjugate(G, H.elements(), g);
    if (X == mask || done.count(X)) continue;
    std::vector<Index> gens(H.elements());
    for (Index x = 0; x < G.order(); ++x)
      if (X[x]) gens.push_back(x);
    const auto J = naive_closure(G, gens);
    bool found = false;
    for (Index j = 0; j < G.order() && !found; ++j)
      if (J[j] && naive_conjugate(G, H.elements(), j) == X) found = true;
    if (!found) return false;
    done.insert(std::move(X));
  }
  return true;
}

// Every subgroup of a small group, by closing all subsets of size <= 2 of
// its elements (enough for groups whose subgroups are 2-generated).
inline std::vector<std::vector<char>> naive_two_generated(const Subgroup& K) {
  const Group& G = K.ambient();
  std::set<std::vector<char>> seen;
  for (Index a : K.elements())
    for (Index b : K.elements())
      if (a <= b) seen.insert(naive_closure(G, {a, b}));
  return {seen.begin(), seen.end()};
}

inline std::size_t mask_count(const std::vector<char>& m) {
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
}

}  // namespace prn::test
