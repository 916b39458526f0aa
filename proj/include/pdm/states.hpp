#pragma once

#include <complex>
#include <optional>

#include "pdm/params.hpp"
#include "pdm/spectra.hpp"

namespace pdm {

enum class StateKind { Trigonometric, RecipQuadraticBound, RecipQuadraticScattering, Exponential, Parabolic };

/// An analytic eigenstate, unnormalized unless `normalized` is set. Construct through the
/// factory functions below, which check that the state exists.
struct EigenState {
  ProfileId profile;
  OrderingParams ordering;
  StateKind kind;
  int n = 0;  // quantum number; -1 for continuum states
  Parity parity = Parity::None;
  double e_tilde = 0.0;
  std::optional<double> k;  // exponential profile only
  bool normalized = false;
  double norm_constant = 1.0;
};

EigenState trigonometric_state(const ProfileId& profile, const OrderingParams& ordering, int n);
EigenState recip_quadratic_bound_state(const OrderingParams& ordering, int n);
/// Scattering state at Ẽ > V⁽∞⁾ in the even or odd sector. Ẽ = V⁽∞⁾ gives the trivial
/// solution and is rejected together with Ẽ below the threshold (InvalidEnergy).
EigenState recip_quadratic_scattering_state(const OrderingParams& ordering, double e_tilde, Parity parity);
/// State n (counted from 0) of the exponential profile.
EigenState exponential_state(const OrderingParams& ordering, int n);
/// Parabolic profile on |x| <= ell at any Ẽ; the spectrum is fixed by whatever lies outside.
EigenState parabolic_state(const OrderingParams& ordering, double e_tilde, double ell);

// Per-family evaluators. Each multiplies by the state's norm_constant.
double eval_trigonometric(const EigenState& state, double x);
std::complex<double> eval_recip_quadratic(const EigenState& state, double x);
double eval_exponential(const EigenState& state, double x);
double eval_parabolic(const OrderingParams& ordering, double e_tilde, double x, double ell);

/// Dispatches on state.kind.
std::complex<double> eval(const EigenState& state, double x);
/// ζ(z) = ψ(x(z)) / m(x(z))^{1/4}.
std::complex<double> eval_zeta(const EigenState& state, double z);

/// ψ′(0+) of an exponential state. The slope at 0− is its negative, so the derivative
/// is continuous at the origin only when this vanishes.
double derivative_jump_exponential(const EigenState& state);

double density(const EigenState& state, double x);
/// Rescales so that ∫|ψ|² dx = 1. Throws NotNormalizable for scattering states.
EigenState normalize(const EigenState& state);
/// ∫|ψ|² dx by adaptive Gauss–Kronrod quadrature.
double norm_squared(const EigenState& state);

}  // namespace pdm
