#include "pdm/error.hpp"

namespace pdm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DivergentAtOne: return "DivergentAtOne";
    case ErrorKind::SingularAtZero: return "SingularAtZero";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::SingularInterior: return "SingularInterior";
    case ErrorKind::NotDiscrete: return "NotDiscrete";
    case ErrorKind::InvalidEnergy: return "InvalidEnergy";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DegenerateJunction: return "DegenerateJunction";
    case ErrorKind::ZeroEnergy: return "ZeroEnergy";
    case ErrorKind::ResonanceDenominator: return "ResonanceDenominator";
  }
  return "Unknown";
}

}  // namespace pdm
