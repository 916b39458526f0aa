#pragma once

#include <optional>
#include <vector>

#include "pdm/params.hpp"

namespace pdm {

enum class Parity { Even, Odd, None };

std::string_view to_string(Parity p) noexcept;

struct Level {
  int n;
  Parity parity;
  double e_tilde;
  std::optional<double> k;  // wave number for the exponential profile, Ẽ = k²
};

/// Ordered energy levels. `exhaustive` is set only when the list is provably complete
/// (the finite bound-state ladder of the reciprocal quadratic profile).
struct LevelSet {
  std::vector<Level> levels;
  bool exhaustive = false;
};

/// Levels n = 0..n_max of the soliton-like or reciprocal biquadratic profile:
/// Ẽ = n² + 2λn + λ + V⁽⁰⁾ with λ = 1 − 2ν = (1 + √(1+4ω))/2.
/// Throws NotDiscrete unless the arrangement has a discrete spectrum.
LevelSet levels_trigonometric(const ProfileId& profile, const OrderingParams& ordering, int n_max);

/// Every bound state of the reciprocal quadratic profile, 0 <= n < 2√(ab) − 1/2.
/// Empty (but exhaustive) for ab <= 1/16, including ab < 0.
LevelSet bound_levels_recip_quadratic(const OrderingParams& ordering);

/// V⁽∞⁾ of the reciprocal quadratic profile; scattering states exist above it.
double scattering_threshold(const OrderingParams& ordering);

/// Left side of the exponential-profile quantization condition
/// 2k J_{α−1}(k) + (1 − 2α) J_α(k), evaluated in the equivalent form J_α + 2k J′_α so
/// that α = 0 needs no negative order.
double exponential_quantization(double alpha, double k);

/// First `count` positive roots k of the quantization condition, refined by bisection to
/// 1e-12; n counts from 0 and Ẽ = k². Throws NotDiscrete when ω < −1/4.
LevelSet exponential_levels(const OrderingParams& ordering, int count);

}  // namespace pdm
