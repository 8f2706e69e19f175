#include "prn/error.hpp"
#include "prn/wreath.hpp"

namespace prn {

namespace {

std::vector<Perm> top_generators(std::uint32_t n) {
  std::vector<Perm> out;
  if (n >= 2) out.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    out.push_back(Perm(std::move(cycle)));
  }
  return out;
}

}  // namespace

GenericWreath::GenericWreath(GroupPtr base, std::uint32_t n, std::size_t cap)
    : base_(std::move(base)), n_(n) {
  if (n_ < 1 || n_ > 20) throw Error(Errc::InvalidArgument, "generic_wreath: n must be in 1..20");
  unsigned __int128 order = factorial(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    order *= base_->order();
    if (order > cap) throw Error(Errc::CapExceeded, "generic wreath product exceeds the closure cap");
  }
  const Elem& one = base_->element(base_->identity());
  std::vector<Elem> gens;
  for (Index b : base_->generator_indices()) {
    if (b == base_->identity()) continue;
    BaseWreathElem g{std::vector<Elem>(n_, one), Perm::identity(n_)};
    g.base[0] = base_->element(b);
    gens.emplace_back(std::move(g));
  }
  for (Perm& s : top_generators(n_))
    gens.emplace_back(BaseWreathElem{std::vector<Elem>(n_, one), std::move(s)});
  if (gens.empty()) gens.emplace_back(BaseWreathElem{std::vector<Elem>(n_, one), Perm::identity(n_)});
  const std::string base_name = base_->name().empty() ? std::string("L") : base_->name();
  group_ = closure(std::move(gens), cap, base_name + " wr Sym" + std::to_string(n_));
}

Subgroup GenericWreath::base_power(const Subgroup& P) const {
  if (P.ambient_ptr() != base_) throw Error(Errc::AmbientMismatch, "base_power: P is not in the base group");
  std::vector<Index> gens;
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (Index b : P.generators()) {
      std::vector<Index> slots(n_, base_->identity());
      slots[i] = b;
      gens.push_back(element(slots, Perm::identity(n_)));
    }
  }
  return Subgroup::generated(group_, gens);
}

Subgroup GenericWreath::base_subgroup() const { return base_power(Subgroup::whole(base_)); }

Subgroup GenericWreath::slot(std::size_t i) const {
  if (i >= n_) throw Error(Errc::BadFactorIndex, "generic wreath has no slot " + std::to_string(i));
  std::vector<Index> gens;
  for (Index b : base_->generator_indices()) {
    std::vector<Index> slots(n_, base_->identity());
    slots[i] = b;
    gens.push_back(element(slots, Perm::identity(n_)));
  }
  return Subgroup::generated(group_, gens);
}

Subgroup GenericWreath::top_subgroup() const {
  std::vector<Index> gens;
  for (const Perm& s : top_generators(n_))
    gens.push_back(element(std::vector<Index>(n_, base_->identity()), s));
  return Subgroup::generated(group_, gens);
}

Subgroup GenericWreath::wreath_of(const Subgroup& P) const {
  if (P.ambient_ptr() != base_) throw Error(Errc::AmbientMismatch, "wreath_of: P is not in the base group");
  std::vector<Index> gens = top_subgroup().generators();
  for (Index b : P.generators()) {
    std::vector<Index> slots(n_, base_->identity());
    slots[0] = b;
    gens.push_back(element(slots, Perm::identity(n_)));
  }
  return Subgroup::generated(group_, gens);
}

Perm GenericWreath::top(Index x) const { return group_->element(x).as<BaseWreathElem>().top; }

Index GenericWreath::component(Index x, std::size_t i) const {
  return base_->index_of(group_->element(x).as<BaseWreathElem>().base.at(i));
}

Index GenericWreath::element(const std::vector<Index>& slots, const Perm& top) const {
  if (slots.size() != n_ || top.degree() != n_)
    throw Error(Errc::ShapeMismatch, "generic wreath element of the wrong degree");
  BaseWreathElem e;
  for (Index b : slots) e.base.push_back(base_->element(b));
  e.top = top;
  return group_->index_of(e);
}

GenericWreath generic_wreath(GroupPtr base, std::uint32_t n, std::size_t cap) {
  return GenericWreath(std::move(base), n, cap);
}

}  // namespace prn
