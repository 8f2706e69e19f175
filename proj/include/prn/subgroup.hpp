#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "prn/bitset.hpp"
#include "prn/group.hpp"

namespace prn {

struct Extension;

// A subgroup of a materialized ambient group, stored as a membership bitset
// plus its sorted element indices and a short generating list. Two subgroups
// are equal when they share the ambient group and have the same elements.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup whole(GroupPtr ambient);
  static Subgroup trivial(GroupPtr ambient);
  static Subgroup generated(GroupPtr ambient, std::span<const Index> gens);
  // Throws Error(ElementNotInAmbient) for a generator outside the ambient group.
  static Subgroup generated(GroupPtr ambient, const std::vector<Elem>& gens);
  // `members` must already be closed under multiplication; a generating list
  // is picked greedily in canonical order.
  static Subgroup from_members(GroupPtr ambient, Bitset members);

  const Group& ambient() const noexcept { return *ambient_; }
  const GroupPtr& ambient_ptr() const noexcept { return ambient_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Index i) const noexcept { return members_.test(i); }
  const std::vector<Index>& elements() const noexcept { return elements_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  const Bitset& members() const noexcept { return members_; }
  std::uint64_t fingerprint() const noexcept { return members_.hash(); }

  bool same_ambient(const Subgroup& other) const noexcept { return ambient_ == other.ambient_; }
  bool is_subgroup_of(const Subgroup& other) const;
  std::vector<Elem> generator_elems() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  friend struct Extension;
  friend Extension extend(const Subgroup&, std::span<const Index>, std::size_t, bool);

  GroupPtr ambient_;
  Bitset members_;
  std::vector<Index> elements_;
  std::vector<Index> generators_;
};

struct Extension {
  Subgroup group;
  // Right coset representatives of the base in `group`, identity first
  // (filled only when requested).
  std::vector<Index> coset_reps;
  // false when the size limit was hit; `group` is then unusable.
  bool complete = true;
};

// <base, gens> built coset by coset over the base (Dimino's method).
Extension extend(const Subgroup& base, std::span<const Index> gens,
                 std::size_t limit = std::numeric_limits<std::size_t>::max(),
                 bool want_reps = false);

// Throws Error(AmbientMismatch) unless both live in the same ambient group.
void require_same_ambient(const Subgroup& a, const Subgroup& b, const char* op);

}  // namespace prn
