#pragma once

#include <vector>

#include "prn/perm.hpp"
#include "prn/subgroup.hpp"

namespace prn {

// Right multiplication of L on the right cosets K x of K <= L. Coset i is
// K * reps[i]; cosets are numbered in order of their least element.
struct CosetAction {
  Subgroup container;
  Subgroup stabilizer;
  std::vector<Index> reps;
  // ambient index -> coset number for elements of the container, ~0 otherwise
  std::vector<Index> label;

  std::size_t degree() const noexcept { return reps.size(); }
  Point act(Point coset, Index g) const;
  // Throws Error(ElementNotInAmbient) when g is outside the container.
  Perm image(Index g) const;
};

// Also checks the homomorphism property on every pair of generators of L
// (Error(StructureCheckFailed) on failure). Throws Error(AmbientMismatch).
CosetAction coset_action(const Subgroup& L, const Subgroup& K);
CosetAction coset_action(const GroupPtr& G, const Subgroup& K);

}  // namespace prn
