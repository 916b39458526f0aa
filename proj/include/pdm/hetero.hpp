#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pdm/params.hpp"

namespace pdm::hetero {

using cd = std::complex<double>;

/// Double heterostructure: constant mass m1 for x < −ℓ, m2 for x > ℓ, and the parabolic
/// interpolation m(x) = 4η(x+χ)² in between, which matches both masses continuously.
struct HeteroConfig {
  double m1;
  double m2;
  double ell;
  OrderingParams ordering;
  double chi;
  double eta;
  double alpha;  // Bessel order ½√(1+4ω) from the parabolic ω of the ordering

  double inner_mass(double x) const { return 4.0 * eta * (x + chi) * (x + chi); }
};

/// Throws DegenerateJunction for m1 = m2, DomainError for non-positive inputs, and
/// InvalidOrdering when the Bessel order is imaginary (ω < −1/4).
HeteroConfig build_config(double m1, double m2, double ell, const OrderingParams& ordering);

/// Value and x-derivative of one inner particular solution.
struct InnerValue {
  cd psi;
  cd dpsi;
};

/// The pair (J, H⁽¹⁾) for Ẽ > 0 or (I, K) for Ẽ < 0, each times |x+χ|^{3/2}, of argument
/// √(η|Ẽ|)(x+χ)². Throws ZeroEnergy for Ẽ = 0 and DomainError for |x| > ℓ.
std::pair<InnerValue, InnerValue> inner_solutions(const HeteroConfig& cfg, double e_tilde, double x);

/// The Ẽ = 0 pair |x+χ|^{3/2±2α}.
std::pair<InnerValue, InnerValue> inner_solutions_zero_energy(const HeteroConfig& cfg, double x);

/// (γ1, γ2)⊥ = (γ2, −γ1).
inline Eigen::Vector2cd perp(const Eigen::Vector2cd& v) { return {v[1], -v[0]}; }
/// vᵀw without conjugation.
inline cd dot(const Eigen::Vector2cd& v, const Eigen::Vector2cd& w) { return v[0] * w[0] + v[1] * w[1]; }

struct BoundaryVectors {
  Eigen::Vector2cd theta_1, theta_2;          // inner solutions at −ℓ and +ℓ
  Eigen::Vector2cd theta_dot_1, theta_dot_2;  // their derivatives
  Eigen::Vector2cd kappa_1, kappa_2;          // ϑ̇1 + ik1ϑ1, ϑ̇2 − ik2ϑ2
  cd k1, k2;                                  // √(m Ẽ), principal branch
};

BoundaryVectors boundary_vectors(const HeteroConfig& cfg, double e_tilde);

/// κ1ᵀκ2⊥ for Ẽ < 0, evaluated in real modified-Bessel arithmetic.
double bound_state_determinant(const HeteroConfig& cfg, double e_tilde);

struct BoundState {
  double e_tilde;
  cd c1, c2;
  cd b;  // amplitude of e^{−|k2|x} on the right, for e^{|k1|x} with unit amplitude on the left
};

struct BoundSearch {
  double e_lo = -50.0;
  double e_hi = -1e-6;
  int scan_points = 2048;
  int max_states = 64;
};

std::vector<BoundState> find_bound_states(const HeteroConfig& cfg, const BoundSearch& search = {});

struct ScatteringResult {
  double e_tilde;
  cd r, t;
  cd c1, c2;
  double flux_residual;
};

/// Unit incident amplitude from the left. Throws ResonanceDenominator when |κ1ᵀκ2⊥| < 1e-13.
ScatteringResult scattering(const HeteroConfig& cfg, double e_tilde);

struct SweepRow {
  double e_tilde;
  double r2 = 0.0;
  double t2 = 0.0;
  double flux_residual = 0.0;
  bool resonance = false;  // denominator vanished; the other columns are meaningless
};

std::vector<SweepRow> rt_sweep(const HeteroConfig& cfg, const std::vector<double>& e_grid);

/// Assembled piecewise wave function of a scattering solution.
cd scattering_psi(const HeteroConfig& cfg, const ScatteringResult& s, double x);
/// Assembled piecewise wave function of a bound state.
cd bound_psi(const HeteroConfig& cfg, const BoundState& b, double x);

}  // namespace pdm::hetero
