#include "prn/wreath.hpp"

#include <unordered_set>

#include "prn/algebra.hpp"
#include "prn/error.hpp"

namespace prn {

void WreathGroupSpec::validate() const {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "wreath spec without factors");
  for (const WreathFactor& f : factors) {
    if (!is_prime(f.p))
      throw Error(Errc::InvalidArgument, "wreath factor p = " + std::to_string(f.p) + " is not prime");
    if (f.n < 1) throw Error(Errc::InvalidArgument, "wreath factor n must be at least 1");
    if (f.n > 20) throw Error(Errc::CapExceeded, "wreath factor n = " + std::to_string(f.n));
  }
}

std::uint64_t WreathGroupSpec::order() const {
  unsigned __int128 total = 1;
  for (const WreathFactor& f : factors) {
    for (std::uint32_t i = 0; i < f.n; ++i) total *= f.p;
    total *= factorial(f.n);
    if (total >> 64) throw Error(Errc::CapExceeded, "wreath product order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

WreathElem w_mul(const WreathElem& a, const WreathElem& b) {
  if (a.p != b.p || a.v.size() != b.v.size() || a.s.degree() != b.s.degree())
    throw Error(Errc::ShapeMismatch, "w_mul: operands of different (p, n)");
  return multiply(a, b).as<WreathElem>();
}

WreathElem w_inv(const WreathElem& a) { return inverse(a).as<WreathElem>(); }

WreathElem w_identity(std::uint32_t p, std::uint32_t n) {
  return WreathElem{p, std::vector<std::uint32_t>(n, 0), Perm::identity(n)};
}

namespace {

std::vector<Perm> sym_generators(std::uint32_t n) {
  std::vector<Perm> out;
  if (n >= 2) out.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    out.push_back(Perm(std::move(cycle)));
  }
  return out;
}

WreathElem vector_elem(std::uint32_t p, std::vector<std::uint32_t> v) {
  const auto n = v.size();
  return WreathElem{p, std::move(v), Perm::identity(n)};
}

WreathElem unit(std::uint32_t p, std::uint32_t n, std::uint32_t i) {
  std::vector<std::uint32_t> v(n, 0);
  v[i] = 1;
  return vector_elem(p, std::move(v));
}

GroupPtr build_factor(const WreathFactor& f, std::size_t cap) {
  std::vector<Elem> gens{unit(f.p, f.n, 0)};
  for (Perm& s : sym_generators(f.n))
    gens.emplace_back(WreathElem{f.p, std::vector<std::uint32_t>(f.n, 0), std::move(s)});
  return closure(std::move(gens), cap,
                 "Z" + std::to_string(f.p) + " wr Sym" + std::to_string(f.n));
}

}  // namespace

WreathProduct::WreathProduct(WreathGroupSpec spec, std::size_t cap) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.order() > cap) throw Error(Errc::CapExceeded, "wreath product exceeds the closure cap");
  std::vector<GroupPtr> factors;
  std::string name;
  for (const WreathFactor& f : spec_.factors) {
    factors.push_back(build_factor(f, cap));
    name += (name.empty() ? "" : " x ") + factors.back()->name();
  }
  product_ = direct_product(std::move(factors), cap, name);
}

void WreathProduct::check_factor(std::size_t i) const {
  if (i >= spec_.factors.size())
    throw Error(Errc::BadFactorIndex, "no wreath factor " + std::to_string(i));
}

const GroupPtr& WreathProduct::factor(std::size_t i) const {
  check_factor(i);
  return product_.factors[i];
}

Subgroup WreathProduct::factor_base(std::size_t i) const {
  const WreathFactor f = spec_.factors.at(i);
  std::vector<Elem> gens;
  for (std::uint32_t j = 0; j < f.n; ++j) gens.emplace_back(unit(f.p, f.n, j));
  return Subgroup::generated(factor(i), gens);
}

Subgroup WreathProduct::factor_complement(std::size_t i) const {
  const WreathFactor f = spec_.factors.at(i);
  std::vector<Elem> gens;
  for (Perm& s : sym_generators(f.n))
    gens.emplace_back(WreathElem{f.p, std::vector<std::uint32_t>(f.n, 0), std::move(s)});
  return Subgroup::generated(factor(i), gens);
}

Subgroup WreathProduct::factor_v_plus(std::size_t i) const {
  const WreathFactor f = spec_.factors.at(i);
  std::vector<Elem> gens{vector_elem(f.p, std::vector<std::uint32_t>(f.n, 1))};
  return Subgroup::generated(factor(i), gens);
}

Subgroup WreathProduct::factor_v_minus(std::size_t i) const {
  const WreathFactor f = spec_.factors.at(i);
  std::vector<Elem> gens;
  for (std::uint32_t j = 1; j < f.n; ++j) {
    std::vector<std::uint32_t> v(f.n, 0);
    v[0] = 1;
    v[j] = f.p - 1;
    gens.emplace_back(vector_elem(f.p, std::move(v)));
  }
  return Subgroup::generated(factor(i), gens);
}

Subgroup WreathProduct::base() const {
  Subgroup out = Subgroup::trivial(group());
  for (std::size_t i = 0; i < factor_count(); ++i) out = join(out, base_factor(i));
  return out;
}

Subgroup WreathProduct::complement() const {
  Subgroup out = Subgroup::trivial(group());
  for (std::size_t i = 0; i < factor_count(); ++i)
    out = join(out, product_.embed(i, factor_complement(i)));
  return out;
}

Subgroup WreathProduct::base_factor(std::size_t i) const {
  return product_.embed(i, factor_base(i));
}

Subgroup WreathProduct::v_plus(std::size_t i) const { return product_.embed(i, factor_v_plus(i)); }

Subgroup WreathProduct::v_minus(std::size_t i) const {
  return product_.embed(i, factor_v_minus(i));
}

Subgroup WreathProduct::project(std::size_t i, const Subgroup& H) const {
  check_factor(i);
  return product_.project(i, H);
}

const WreathElem& WreathProduct::component(Index x, std::size_t i) const {
  check_factor(i);
  return group()->element(x).as<TupleElem>().parts[i].as<WreathElem>();
}

Perm WreathProduct::bar(std::size_t i, Index x) const { return component(x, i).s; }

std::vector<Perm> WreathProduct::bar(Index x) const {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < factor_count(); ++i) out.push_back(bar(i, x));
  return out;
}

Subgroup WreathProduct::bar_subgroup(const Subgroup& H) const {
  if (H.ambient_ptr() != group()) throw Error(Errc::AmbientMismatch, "bar_subgroup: H is not in G");
  std::vector<Index> gens;
  for (Index h : H.generators()) {
    std::vector<WreathElem> parts;
    for (std::size_t i = 0; i < factor_count(); ++i) {
      const WreathFactor f = spec_.factors[i];
      parts.push_back(WreathElem{f.p, std::vector<std::uint32_t>(f.n, 0), bar(i, h)});
    }
    gens.push_back(element(parts));
  }
  return Subgroup::generated(group(), gens);
}

std::uint64_t WreathProduct::bar_image_order(std::size_t i, const Subgroup& H) const {
  const Subgroup P = project(i, H);
  std::unordered_set<std::uint64_t> tops;
  for (Index x : P.elements()) tops.insert(P.ambient().element(x).as<WreathElem>().s.rank());
  return tops.size();
}

bool WreathProduct::bar_is_full(std::size_t i, const Subgroup& H) const {
  return bar_image_order(i, H) == factorial(spec_.factors.at(i).n);
}

const std::vector<std::uint32_t>& WreathProduct::sigma(std::size_t i, Index x) const {
  return component(x, i).v;
}

Index WreathProduct::element(const std::vector<WreathElem>& parts) const {
  if (parts.size() != factor_count())
    throw Error(Errc::ShapeMismatch, "wreath element needs one part per factor");
  TupleElem t;
  for (const WreathElem& w : parts) t.parts.emplace_back(w);
  return group()->index_of(t);
}

WreathProduct build_product(WreathGroupSpec spec, std::size_t cap) {
  return WreathProduct(std::move(spec), cap);
}

Subgroup v_plus(std::uint32_t p, std::uint32_t n) {
  return WreathProduct(WreathGroupSpec{{{p, n}}}).v_plus(0);
}

Subgroup v_minus(std::uint32_t p, std::uint32_t n) {
  return WreathProduct(WreathGroupSpec{{{p, n}}}).v_minus(0);
}

bool v_minus_contained(const WreathProduct& W, const Subgroup& H, std::size_t factor) {
  if (factor >= W.factor_count())
    throw Error(Errc::BadFactorIndex, "no wreath factor " + std::to_string(factor));
  if (H.ambient_ptr() != W.group())
    throw Error(Errc::AmbientMismatch, "v_minus_contained: H is not in the wreath product");
  const Subgroup Vm = W.v_minus(factor);
  for (Index g : Vm.generators())
    if (!H.contains(g)) return false;
  return true;
}

}  // namespace prn
