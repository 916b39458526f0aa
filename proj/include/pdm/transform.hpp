#pragma once

#include <complex>
#include <functional>
#include <limits>

#include "pdm/params.hpp"

namespace pdm {

/// z-space interval image of the profile's x-domain under z(x) = ∫₀ˣ √m.
struct ZDomain {
  double lo;
  double hi;
  bool open_lo = true;
  bool open_hi = true;

  bool contains(double z) const noexcept {
    return (open_lo ? z > lo : z >= lo) && (open_hi ? z < hi : z <= hi);
  }
};

ZDomain z_domain(const ProfileId& profile);

/// x-space domain: the real line, or [−ℓ, ℓ] for the parabolic profile.
struct XDomain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

XDomain x_domain(const ProfileId& profile);

/// Dimensionless mass m(x) and its analytic first two derivatives.
struct MassJet {
  double m;
  double dm;
  double d2m;
};

double mass(const ProfileId& profile, double x);
/// Analytic m, m′, m″. For the exponential profile the derivatives are the one-sided
/// smooth parts (the kink at x = 0 contributes only a distribution there).
MassJet mass_jet(const ProfileId& profile, double x);

double z_of_x(const ProfileId& profile, double x);
double x_of_z(const ProfileId& profile, double z);

/// Additive external-potential hook Ṽ(x); the shipped profiles use none.
using ExternalPotential = std::function<double(double)>;

/// Closed-form V_{a,b}(z). Throws SingularPoint within 1e-9 of a pole and DomainError
/// outside the z-domain.
double effective_potential(const ProfileId& profile, const OrderingParams& ordering, double z,
                           const ExternalPotential& external = {});

/// V_{a,b}(z) from the generic expression in m, (m′/m) and (m′/m)′, with the derivatives
/// taken by fourth-order central differences of m at h = 1e-3(1+|x|). Independent of the
/// closed forms; used to cross-check them.
double effective_potential_generic(const ProfileId& profile, const OrderingParams& ordering, double z);

/// Ambiguity potential Ũ_{a,b}(x) = −(1/m)[(a+b)/2 (m′/m)′ − (ab+(a+b)/2)(m′/m)²].
double ambiguity_potential(const ProfileId& profile, const OrderingParams& ordering, double x);

/// ψ(x) = m(x)^{1/4} ζ(z(x)).
std::complex<double> reconstruct_psi(const ProfileId& profile,
                                     const std::function<std::complex<double>(double)>& zeta, double x);

}  // namespace pdm
