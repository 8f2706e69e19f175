#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prn/elem.hpp"

namespace prn {

enum class Verdict { Pronormal, NotPronormal, NotApplicable };

std::string_view verdict_name(Verdict v);

// One step of a decision trail. `criterion` is a stable machine-readable id
// such as "coprime_degree" or "conjugate_not_joined"; `factor` is the wreath
// factor it refers to, if any.
struct Reason {
  std::string criterion;
  std::optional<std::size_t> factor;
  std::string detail;
};

struct Decision {
  Verdict verdict = Verdict::NotApplicable;
  std::vector<Reason> reasons;
  // Witness elements (for example the conjugating element g of a failed
  // pronormality test).
  std::vector<Elem> witnesses;

  bool pronormal() const noexcept { return verdict == Verdict::Pronormal; }
  Decision& because(std::string criterion, std::string detail,
                    std::optional<std::size_t> factor = std::nullopt) {
    reasons.push_back({std::move(criterion), factor, std::move(detail)});
    return *this;
  }
};

inline Decision make_decision(Verdict v) {
  Decision d;
  d.verdict = v;
  return d;
}

}  // namespace prn
