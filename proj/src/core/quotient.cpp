#include "prn/quotient.hpp"

#include <algorithm>
#include <memory>

#include "prn/algebra.hpp"
#include "prn/error.hpp"

namespace prn {

QuotientGroup quotient(const GroupPtr& G, const Subgroup& N) {
  if (N.ambient_ptr() != G) throw Error(Errc::AmbientMismatch, "quotient: N is not a subgroup of G");
  const Subgroup whole = Subgroup::whole(G);
  if (!is_normal_in(N, whole)) throw Error(Errc::NotNormal, "quotient: N is not normal in G");

  constexpr Index kUnset = ~Index{0};
  QuotientGroup q;
  q.numerator = G;
  q.kernel = N;
  q.projection.assign(G->order(), kUnset);
  std::vector<Index> buf(N.order());
  std::vector<Elem> elements;
  for (Index g = 0; g < G->order(); ++g) {
    if (q.projection[g] != kUnset) continue;
    const Index label = static_cast<Index>(q.reps.size());
    G->right_mul(N.elements(), g, buf.data());
    for (Index x : buf) q.projection[x] = label;
    q.reps.push_back(g);
    elements.push_back(CosetElem{std::make_shared<const Elem>(G->element(g))});
  }

  std::vector<Elem> gens;
  std::vector<Index> seen;
  for (Index g : G->generator_indices()) {
    const Index label = q.projection[g];
    if (label == q.projection[G->identity()]) continue;
    if (std::find(seen.begin(), seen.end(), label) != seen.end()) continue;
    seen.push_back(label);
    gens.push_back(elements[label]);
  }
  if (gens.empty()) gens.push_back(elements[q.projection[G->identity()]]);
  const std::string name = G->name().empty() ? std::string() : G->name() + "/N";
  q.group = Group::derived(std::move(elements), std::move(gens), G, q.reps, q.projection, name);
  return q;
}

Subgroup QuotientGroup::image(const Subgroup& H) const {
  if (H.ambient_ptr() != numerator) throw Error(Errc::AmbientMismatch, "image: H is not in the numerator");
  std::vector<Index> gens;
  for (Index h : H.generators()) gens.push_back(projection[h]);
  return Subgroup::generated(group, gens);
}

Subgroup QuotientGroup::preimage(const Subgroup& Hbar) const {
  if (Hbar.ambient_ptr() != group) throw Error(Errc::AmbientMismatch, "preimage: not a quotient subgroup");
  std::vector<Index> gens;
  for (Index h : Hbar.generators()) gens.push_back(reps[h]);
  return extend(kernel, gens).group;
}

}  // namespace prn
