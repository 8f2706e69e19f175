#include "prn/product.hpp"

#include "prn/error.hpp"

namespace prn {

DirectProduct direct_product(std::vector<GroupPtr> factors, std::size_t cap, std::string name) {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "direct_product of no groups");
  std::uint64_t order = 1;
  for (const GroupPtr& f : factors) {
    order *= f->order();
    if (order > cap) throw Error(Errc::CapExceeded, "direct product exceeds the closure cap");
  }
  TupleElem identity;
  for (const GroupPtr& f : factors) identity.parts.push_back(f->element(f->identity()));
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (Index g : factors[i]->generator_indices()) {
      if (g == factors[i]->identity()) continue;
      TupleElem t = identity;
      t.parts[i] = factors[i]->element(g);
      gens.emplace_back(std::move(t));
    }
  if (gens.empty()) gens.emplace_back(identity);

  DirectProduct dp;
  dp.group = closure(std::move(gens), cap, std::move(name));
  dp.factors = std::move(factors);
  dp.projections.resize(dp.factors.size());
  for (std::size_t i = 0; i < dp.factors.size(); ++i) {
    auto& proj = dp.projections[i];
    proj.resize(dp.group->order());
    for (Index x = 0; x < dp.group->order(); ++x)
      proj[x] = dp.factors[i]->index_of(dp.group->element(x).as<TupleElem>().parts[i]);
  }
  return dp;
}

Index DirectProduct::embed(std::size_t i, Index y) const {
  if (i >= factors.size()) throw Error(Errc::BadFactorIndex, "embed: no factor " + std::to_string(i));
  TupleElem t;
  for (const GroupPtr& f : factors) t.parts.push_back(f->element(f->identity()));
  t.parts[i] = factors[i]->element(y);
  return group->index_of(t);
}

Subgroup DirectProduct::project(std::size_t i, const Subgroup& H) const {
  if (i >= factors.size()) throw Error(Errc::BadFactorIndex, "project: no factor " + std::to_string(i));
  if (H.ambient_ptr() != group) throw Error(Errc::AmbientMismatch, "project: H is not in the product");
  std::vector<Index> gens;
  for (Index h : H.generators()) gens.push_back(projections[i][h]);
  return Subgroup::generated(factors[i], gens);
}

Subgroup DirectProduct::embed(std::size_t i, const Subgroup& Hi) const {
  if (i >= factors.size()) throw Error(Errc::BadFactorIndex, "embed: no factor " + std::to_string(i));
  if (Hi.ambient_ptr() != factors[i]) throw Error(Errc::AmbientMismatch, "embed: not a factor subgroup");
  std::vector<Index> gens;
  for (Index h : Hi.generators()) gens.push_back(embed(i, h));
  return Subgroup::generated(group, gens);
}

Subgroup DirectProduct::component(std::size_t i) const {
  if (i >= factors.size()) throw Error(Errc::BadFactorIndex, "component: no factor " + std::to_string(i));
  return embed(i, Subgroup::whole(factors[i]));
}

}  // namespace prn
