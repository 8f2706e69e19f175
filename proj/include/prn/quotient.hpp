#pragma once

#include <vector>

#include "prn/subgroup.hpp"

namespace prn {

// G/N with each coset labelled by its least element. The quotient's own
// elements are CosetElem values, multiplied through the numerator.
struct QuotientGroup {
  GroupPtr group;
  GroupPtr numerator;
  Subgroup kernel;
  // numerator index -> quotient index
  std::vector<Index> projection;
  // quotient index -> least numerator element of the coset
  std::vector<Index> reps;

  Index project(Index x) const { return projection[x]; }
  // HN/N
  Subgroup image(const Subgroup& H) const;
  // Full preimage in the numerator.
  Subgroup preimage(const Subgroup& Hbar) const;
};

// Throws Error(NotNormal) unless N is normal in G, Error(AmbientMismatch)
// unless N lives in G.
QuotientGroup quotient(const GroupPtr& G, const Subgroup& N);

}  // namespace prn
