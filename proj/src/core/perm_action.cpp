#include "prn/action.hpp"

#include "prn/error.hpp"

namespace prn {

namespace {
constexpr Index kOutside = ~Index{0};
}

Point CosetAction::act(Point coset, Index g) const {
  return label[container.ambient().mul(reps[coset], g)];
}

Perm CosetAction::image(Index g) const {
  if (!container.contains(g))
    throw Error(Errc::ElementNotInAmbient, "coset action: element outside the acting group");
  std::vector<Point> images(reps.size());
  for (Point i = 0; i < reps.size(); ++i) images[i] = act(i, g);
  return Perm(std::move(images));
}

CosetAction coset_action(const Subgroup& L, const Subgroup& K) {
  require_same_ambient(L, K, "coset_action");
  if (!K.is_subgroup_of(L)) throw Error(Errc::AmbientMismatch, "coset_action: K is not inside L");
  const Group& G = L.ambient();
  CosetAction a{L, K, {}, std::vector<Index>(G.order(), kOutside)};
  std::vector<Index> buf(K.order());
  for (Index g : L.elements()) {
    if (a.label[g] != kOutside) continue;
    G.right_mul(K.elements(), g, buf.data());
    for (Index x : buf) a.label[x] = static_cast<Index>(a.reps.size());
    a.reps.push_back(g);
  }
  const auto& gens = L.generators();
  for (Index x : gens)
    for (Index y : gens)
      if (compose(a.image(x), a.image(y)) != a.image(G.mul(x, y)))
        throw Error(Errc::StructureCheckFailed, "coset action is not a homomorphism");
  return a;
}

CosetAction coset_action(const GroupPtr& G, const Subgroup& K) {
  return coset_action(Subgroup::whole(G), K);
}

}  // namespace prn
