#pragma once

#include <complex>

namespace pdm::specfun {

using cd = std::complex<double>;

struct SpecFunResult {
  cd value;
  double est_abs_error = 0.0;
  /// Set when the value came from the perturbation fallback of the logarithmic ₂F₁ case.
  bool perturbed = false;
};

// Complex Gamma family. Real arguments are forwarded to std::tgamma/std::lgamma.
cd gamma(cd z);
/// 1/Γ(z); entire, exactly zero at non-positive integers.
cd rgamma(cd z);

/// Gauss hypergeometric ₂F₁(a, b; c; y) for real y in [0, 1].
///
/// Direct power series for y <= 1/2, the y -> 1-y connection formula above that, Gauss
/// summation at y = 1 and a finite sum when a or b is a non-positive integer. When c-a-b
/// is (nearly) an integer the connection formula is replaced by interpolation across
/// nearby non-integer values of b; such results carry `perturbed = true`.
///
/// Throws Error(DomainError) for c in {0, -1, -2, ...} or y outside [0, 1], and
/// Error(DivergentAtOne) for y = 1 with Re(c-a-b) <= 0.
SpecFunResult gauss_2f1(cd a, cd b, cd c, double y);

enum class BesselKind { J, I, K, H1 };

/// Cylinder functions of real order >= 0. Real positive arguments use Steed's continued
/// fractions (x >= 2) or Temme's series (x < 2); other complex arguments are summed from
/// the ascending series and are only accepted for J and I with |y| <= 30.
SpecFunResult bessel(BesselKind kind, double order, cd y);
/// Overload rejecting imaginary orders (arrangements with imaginary order have no spectrum).
SpecFunResult bessel(BesselKind kind, cd order, cd y);

/// d/dy of the cylinder function, from the raising recurrences
/// J' = (ν/y)J − J_{ν+1} (same for H⁽¹⁾), I' = I_{ν+1} + (ν/y)I, K' = −K_{ν+1} + (ν/y)K.
SpecFunResult bessel_derivative(BesselKind kind, double order, cd y);

// Raw real-argument kernels, x > 0, nu >= 0. Exposed for the root finders.
struct BesselJY {
  double j, y, jp, yp;
};
struct BesselIK {
  double i, k, ip, kp;
};
BesselJY bessel_jy(double nu, double x);
BesselIK bessel_ik(double nu, double x);

}  // namespace pdm::specfun
