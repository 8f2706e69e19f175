#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "prn/group.hpp"

namespace prn::detail {

class Engine {
 public:
  virtual ~Engine() = default;
  virtual std::string_view kind() const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual Index inv(Index a) const = 0;
  virtual void right_mul(std::span<const Index> xs, Index g, Index* out) const;
  virtual void left_mul(std::span<const Index> xs, Index g, Index* out) const;
  virtual void conj_all(std::span<const Index> xs, Index g, Index ginv, Index* out) const;
};

// Byte-row engine; every element must have action_degree == degree (1..255).
std::unique_ptr<Engine> make_row_engine(const std::vector<Elem>& elements, std::size_t degree);
// Generic engine multiplying Elems and locating products by code in `group`.
std::unique_ptr<Engine> make_elem_engine(const Group& group);
std::unique_ptr<Engine> make_derived_engine(GroupPtr parent, std::vector<Index> reps,
                                            std::vector<Index> project);

}  // namespace prn::detail
