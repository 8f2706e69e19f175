#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prn {

enum class Errc {
  CapExceeded,
  IncompatiblePayloads,
  ElementNotInAmbient,
  AmbientMismatch,
  NotNormal,
  BudgetExceeded,
  DegreeMismatch,
  NotTransitive,
  ShapeMismatch,
  BadFactorIndex,
  HypothesisViolated,
  SylowNotContained,
  BadPrimePower,
  StructureCheckFailed,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace prn
