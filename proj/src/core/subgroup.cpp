#include "prn/subgroup.hpp"

#include "prn/error.hpp"

namespace prn {

Subgroup Subgroup::whole(GroupPtr ambient) {
  Subgroup s;
  s.members_ = Bitset(ambient->order());
  s.elements_.resize(ambient->order());
  for (Index i = 0; i < ambient->order(); ++i) {
    s.members_.set(i);
    s.elements_[i] = i;
  }
  for (Index g : ambient->generator_indices())
    if (g != ambient->identity()) s.generators_.push_back(g);
  s.ambient_ = std::move(ambient);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr ambient) {
  Subgroup s;
  s.members_ = Bitset(ambient->order());
  s.members_.set(ambient->identity());
  s.elements_ = {ambient->identity()};
  s.ambient_ = std::move(ambient);
  return s;
}

Subgroup Subgroup::generated(GroupPtr ambient, std::span<const Index> gens) {
  return extend(trivial(std::move(ambient)), gens).group;
}

Subgroup Subgroup::generated(GroupPtr ambient, const std::vector<Elem>& gens) {
  std::vector<Index> idx;
  idx.reserve(gens.size());
  for (const Elem& g : gens) idx.push_back(ambient->index_of(g));
  return generated(std::move(ambient), idx);
}

Subgroup Subgroup::from_members(GroupPtr ambient, Bitset members) {
  Subgroup cur = trivial(ambient);
  for (Index x : members.to_indices()) {
    if (cur.contains(x)) continue;
    const Index one[] = {x};
    cur = extend(cur, one).group;
  }
  return cur;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return ambient_ == other.ambient_ && members_.is_subset_of(other.members_);
}

std::vector<Elem> Subgroup::generator_elems() const {
  std::vector<Elem> out;
  out.reserve(generators_.size());
  for (Index g : generators_) out.push_back(ambient_->element(g));
  return out;
}

Extension extend(const Subgroup& base, std::span<const Index> gens, std::size_t limit,
                 bool want_reps) {
  const Group& G = base.ambient();
  Extension result{base, {G.identity()}, true};
  Subgroup& cur = result.group;
  std::vector<Index> buf;
  for (Index g : gens) {
    if (cur.contains(g)) continue;
    std::vector<Index> step_gens = cur.generators_;
    step_gens.push_back(g);
    const std::vector<Index>& block = cur.elements_;
    buf.resize(block.size());
    std::vector<Index> reps{G.identity()};
    std::size_t size = block.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (Index s : step_gens) {
        const Index t = G.mul(reps[i], s);
        if (cur.members_.test(t)) continue;
        size += block.size();
        if (size > limit) {
          result.complete = false;
          return result;
        }
        G.right_mul(block, t, buf.data());
        for (Index x : buf) cur.members_.set(x);
        reps.push_back(t);
      }
    }
    cur.elements_ = cur.members_.to_indices();
    cur.generators_ = std::move(step_gens);
    if (want_reps) {
      std::vector<Index> combined;
      combined.reserve(result.coset_reps.size() * reps.size());
      for (Index r2 : reps)
        for (Index r1 : result.coset_reps) combined.push_back(G.mul(r1, r2));
      result.coset_reps = std::move(combined);
    }
  }
  return result;
}

void require_same_ambient(const Subgroup& a, const Subgroup& b, const char* op) {
  if (!a.same_ambient(b))
    throw Error(Errc::AmbientMismatch, std::string(op) + ": subgroups of different groups");
}

}  // namespace prn
