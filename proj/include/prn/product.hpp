#pragma once

#include <vector>

#include "prn/subgroup.hpp"

namespace prn {

// Direct product of materialized groups on TupleElem values.
struct DirectProduct {
  GroupPtr group;
  std::vector<GroupPtr> factors;
  // projections[i][x] = pi_i(x)
  std::vector<std::vector<Index>> projections;

  std::size_t size() const noexcept { return factors.size(); }
  Index project(std::size_t i, Index x) const { return projections.at(i)[x]; }
  // The element with y in slot i and identities elsewhere.
  Index embed(std::size_t i, Index y) const;
  // pi_i(H) as a subgroup of factor i.
  Subgroup project(std::size_t i, const Subgroup& H) const;
  // Embedded copy of a subgroup of factor i.
  Subgroup embed(std::size_t i, const Subgroup& Hi) const;
  // The embedded factor i.
  Subgroup component(std::size_t i) const;
};

// Throws Error(CapExceeded) when the product order passes `cap`.
DirectProduct direct_product(std::vector<GroupPtr> factors,
                             std::size_t cap = kDefaultClosureCap, std::string name = "");

}  // namespace prn
