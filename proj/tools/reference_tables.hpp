#pragma once

#include <optional>
#include <vector>

#include "pdm/params.hpp"

namespace pdm::cli {

/// Reference constants and spectrum class of one preset arrangement, entered by hand
/// so that the validate command compares the library against data it did not compute.
struct ReferenceArrangement {
  ProfileKind profile;
  Preset ordering;
  Rational omega;
  std::optional<Rational> v0;
  std::optional<Rational> v_inf;
  SpectrumKind kind;
  PotentialShape shape;
};

/// All 25 preset arrangements, profile-major in kAllProfileKinds x kAllPresets order.
const std::vector<ReferenceArrangement>& reference_arrangements();

}  // namespace pdm::cli
