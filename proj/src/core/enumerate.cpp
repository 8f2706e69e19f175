#include <algorithm>
#include <unordered_map>

#include "prn/algebra.hpp"
#include "prn/error.hpp"

namespace prn {

namespace {

// Marks the double coset C g C, one right coset at a time.
void mark_double_coset(const Subgroup& C, Index g, Bitset& marks) {
  const Group& G = C.ambient();
  std::vector<Index> buf(C.order());
  std::vector<Index> queue{g};
  G.right_mul(C.elements(), g, buf.data());
  for (Index x : buf) marks.set(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Index c : C.generators()) {
      const Index u = G.mul(queue[i], c);
      if (marks.test(u)) continue;
      G.right_mul(C.elements(), u, buf.data());
      for (Index x : buf) marks.set(x);
      queue.push_back(u);
    }
  }
}

}  // namespace

std::vector<Subgroup> overgroups_of(const Subgroup& S, const Subgroup& K, std::size_t budget) {
  require_same_ambient(S, K, "overgroups_of");
  if (!S.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "overgroups_of: S is not in K");

  std::vector<Subgroup> found{S};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash{{S.fingerprint(), {0}}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup C = found[i];
    Bitset tried = C.members();
    for (Index g : K.elements()) {
      if (tried.test(g)) continue;
      // <C, g> depends only on the double coset CgC.
      mark_double_coset(C, g, tried);
      const Index one[] = {g};
      Subgroup J = extend(C, one).group;
      auto& bucket = by_hash[J.fingerprint()];
      const bool known = std::any_of(bucket.begin(), bucket.end(),
                                     [&](std::size_t k) { return found[k] == J; });
      if (known) continue;
      if (found.size() >= budget)
        throw Error(Errc::BudgetExceeded,
                    "more than " + std::to_string(budget) + " overgroups");
      bucket.push_back(found.size());
      found.push_back(std::move(J));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

std::vector<Subgroup> all_subgroups(const Subgroup& K, std::size_t budget) {
  return overgroups_of(Subgroup::trivial(K.ambient_ptr()), K, budget);
}

}  // namespace prn
