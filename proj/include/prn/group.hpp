#pragma once

// Materialized finite groups.
//
// A Group owns every element, sorted by canonical code, so an element is
// identified by its Index (its position in that order) and index order is
// canonical order. Arithmetic runs on indices through an engine chosen at
// construction: byte-row permutations when the shape has a small faithful
// action, generic Elem arithmetic otherwise, or delegation to a parent group
// for quotients.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prn/elem.hpp"

namespace prn {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 21;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

namespace detail {
class Engine;
}

class Group {
 public:
  ~Group();
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }

  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const std::vector<Index>& generator_indices() const noexcept { return gen_idx_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const Elem& element(Index i) const { return elements_.at(i); }
  std::uint64_t code(Index i) const { return codes_.at(i); }

  std::optional<Index> find(const Elem& e) const;
  // Throws Error(ElementNotInAmbient).
  Index index_of(const Elem& e) const;

  Index identity() const noexcept { return identity_; }
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  // g^-1 h g
  Index conj(Index h, Index g) const;
  Index pow(Index a, std::uint64_t k) const;
  std::uint64_t element_order(Index a) const;

  // Bulk forms: out[j] = xs[j] * g, g * xs[j] and g^-1 xs[j] g.
  void right_mul(std::span<const Index> xs, Index g, Index* out) const;
  void left_mul(std::span<const Index> xs, Index g, Index* out) const;
  void conj_all(std::span<const Index> xs, Index g, Index* out) const;

  // "rows", "elem" or "derived"
  std::string_view engine_kind() const;

  // Smallest group containing gens. Elements are deduplicated by canonical
  // code and sorted by it. Throws Error(CapExceeded) beyond `cap` elements,
  // Error(IncompatiblePayloads) for mixed shapes, Error(InvalidArgument) for
  // an empty generator list.
  friend GroupPtr closure(std::vector<Elem> gens, std::size_t cap, std::string name);

  // Group whose arithmetic is inherited from `parent`: element i stands for
  // parent element reps[i], and parent element x maps to local index
  // project[x] (a homomorphism onto this group). Elements must be sorted by code.
  static GroupPtr derived(std::vector<Elem> elements, std::vector<Elem> generators,
                          GroupPtr parent, std::vector<Index> reps,
                          std::vector<Index> project, std::string name);

 private:
  Group() = default;
  void finish(std::vector<Elem> generators);

  std::string name_;
  std::vector<Elem> generators_;
  std::vector<Index> gen_idx_;
  std::vector<Elem> elements_;
  std::vector<std::uint64_t> codes_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
  std::unique_ptr<detail::Engine> engine_;
};

GroupPtr closure(std::vector<Elem> gens, std::size_t cap = kDefaultClosureCap,
                 std::string name = "");

}  // namespace prn
