#include "prn/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "engine.hpp"
#include "prn/error.hpp"

namespace prn {

Group::~Group() = default;

GroupPtr closure(std::vector<Elem> gens, std::size_t cap, std::string name) {
  if (gens.empty()) throw Error(Errc::InvalidArgument, "closure of an empty generator list");
  for (const Elem& g : gens)
    if (!same_shape(g, gens.front()))
      throw Error(Errc::IncompatiblePayloads, "generators of different shapes");
  code_bound(gens.front());  // rejects shapes whose codes leave 64 bits

  std::vector<Elem> elems{identity_like(gens.front())};
  std::unordered_set<std::uint64_t> seen{encode(elems.front())};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Elem& g : gens) {
      Elem y = multiply(elems[i], g);
      if (seen.insert(encode(y)).second) {
        if (elems.size() >= cap)
          throw Error(Errc::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
        elems.push_back(std::move(y));
      }
    }
  }

  std::vector<std::uint64_t> codes(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) codes[i] = encode(elems[i]);
  std::vector<std::size_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return codes[a] < codes[b]; });

  auto group = std::shared_ptr<Group>(new Group());
  group->name_ = std::move(name);
  group->elements_.reserve(elems.size());
  group->codes_.reserve(elems.size());
  for (std::size_t i : perm) {
    group->elements_.push_back(std::move(elems[i]));
    group->codes_.push_back(codes[i]);
  }
  const std::size_t degree = action_degree(group->elements_.front());
  group->identity_ = group->index_of(identity_like(group->elements_.front()));
  if (degree > 0)
    group->engine_ = detail::make_row_engine(group->elements_, degree);
  else
    group->engine_ = detail::make_elem_engine(*group);
  group->finish(std::move(gens));
  return group;
}

GroupPtr Group::derived(std::vector<Elem> elements, std::vector<Elem> generators,
                        GroupPtr parent, std::vector<Index> reps, std::vector<Index> project,
                        std::string name) {
  if (elements.empty() || reps.size() != elements.size() || project.size() != parent->order())
    throw Error(Errc::InvalidArgument, "inconsistent derived group data");
  auto group = std::shared_ptr<Group>(new Group());
  group->name_ = std::move(name);
  group->codes_.reserve(elements.size());
  for (const Elem& e : elements) group->codes_.push_back(encode(e));
  if (!std::is_sorted(group->codes_.begin(), group->codes_.end()))
    throw Error(Errc::InvalidArgument, "derived group elements are not sorted by code");
  group->elements_ = std::move(elements);
  group->identity_ = project.at(parent->identity());
  group->engine_ = detail::make_derived_engine(std::move(parent), std::move(reps), std::move(project));
  if (generators.empty()) generators.push_back(group->elements_.front());
  group->finish(std::move(generators));
  return group;
}

void Group::finish(std::vector<Elem> generators) {
  generators_ = std::move(generators);
  gen_idx_.clear();
  for (const Elem& g : generators_) gen_idx_.push_back(index_of(g));
  inverse_.resize(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) inverse_[i] = engine_->inv(i);
}

std::optional<Index> Group::find(const Elem& e) const {
  if (!same_shape(e, elements_.front())) return std::nullopt;
  const std::uint64_t c = encode(e);
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<Index>(it - codes_.begin());
}

Index Group::index_of(const Elem& e) const {
  if (auto i = find(e)) return *i;
  throw Error(Errc::ElementNotInAmbient, to_string(e) + " is not in " +
                                             (name_.empty() ? std::string("the group") : name_));
}

Index Group::mul(Index a, Index b) const { return engine_->mul(a, b); }

Index Group::conj(Index h, Index g) const { return engine_->mul(engine_->mul(inverse_[g], h), g); }

Index Group::pow(Index a, std::uint64_t k) const {
  Index result = identity_;
  Index base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t Group::element_order(Index a) const {
  std::uint64_t k = 1;
  for (Index x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

void Group::right_mul(std::span<const Index> xs, Index g, Index* out) const {
  engine_->right_mul(xs, g, out);
}

void Group::left_mul(std::span<const Index> xs, Index g, Index* out) const {
  engine_->left_mul(xs, g, out);
}

void Group::conj_all(std::span<const Index> xs, Index g, Index* out) const {
  engine_->conj_all(xs, g, inverse_[g], out);
}

std::string_view Group::engine_kind() const { return engine_->kind(); }

}  // namespace prn
