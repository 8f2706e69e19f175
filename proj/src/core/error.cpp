#include "prn/error.hpp"

namespace prn {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::IncompatiblePayloads: return "IncompatiblePayloads";
    case Errc::ElementNotInAmbient: return "ElementNotInAmbient";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotNormal: return "NotNormal";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BadFactorIndex: return "BadFactorIndex";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SylowNotContained: return "SylowNotContained";
    case Errc::BadPrimePower: return "BadPrimePower";
    case Errc::StructureCheckFailed: return "StructureCheckFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

}  // namespace prn
