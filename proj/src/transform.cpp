#include "pdm/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPoleGuard = 1e-9;

void check_parabolic_x(const ProfileId& p, double x) {
  if (!(std::abs(x) <= p.ell())) {
    fail(ErrorKind::DomainError, "parabolic profile evaluated outside |x| <= ell (x = " + std::to_string(x) + ")");
  }
}

void check_z(const ProfileId& p, double z) {
  if (!z_domain(p).contains(z) || !std::isfinite(z)) {
    fail(ErrorKind::DomainError, "z = " + std::to_string(z) + " outside the " +
                                     std::string(to_string(p.kind())) + " z-domain");
  }
}

}  // namespace

ZDomain z_domain(const ProfileId& p) {
  const double inf = std::numeric_limits<double>::infinity();
  switch (p.kind()) {
    case ProfileKind::SolitonLike:
    case ProfileKind::ReciprocalBiquadratic: return {-kHalfPi, kHalfPi};
    case ProfileKind::ReciprocalQuadratic: return {-inf, inf};
    case ProfileKind::Exponential: return {-1.0, 1.0};
    case ProfileKind::Parabolic: {
      const double l2 = p.ell() * p.ell();
      return {-l2, l2, false, false};
    }
  }
  return {};
}

XDomain x_domain(const ProfileId& p) {
  if (p.is(ProfileKind::Parabolic)) return {-p.ell(), p.ell()};
  return {};
}

MassJet mass_jet(const ProfileId& p, double x) {
  switch (p.kind()) {
    case ProfileKind::SolitonLike: {
      const double s = 1.0 / std::cosh(x);
      const double t = std::tanh(x);
      const double s2 = s * s;
      return {s2, -2.0 * s2 * t, s2 * (4.0 * t * t - 2.0 * s2)};
    }
    case ProfileKind::ReciprocalBiquadratic: {
      const double u = 1.0 / (1.0 + x * x);
      const double u2 = u * u;
      return {u2, -4.0 * x * u2 * u, (20.0 * x * x - 4.0) * u2 * u2};
    }
    case ProfileKind::ReciprocalQuadratic: {
      const double u = 1.0 / (1.0 + x * x);
      return {u, -2.0 * x * u * u, (6.0 * x * x - 2.0) * u * u * u};
    }
    case ProfileKind::Exponential: {
      const double m = std::exp(-2.0 * std::abs(x));
      const double sgn = x < 0.0 ? -1.0 : 1.0;
      return {m, -2.0 * sgn * m, 4.0 * m};
    }
    case ProfileKind::Parabolic:
      check_parabolic_x(p, x);
      return {4.0 * x * x, 8.0 * x, 8.0};
  }
  return {};
}

double mass(const ProfileId& p, double x) { return mass_jet(p, x).m; }

double z_of_x(const ProfileId& p, double x) {
  if (std::isnan(x)) fail(ErrorKind::DomainError, "x is NaN");
  switch (p.kind()) {
    case ProfileKind::SolitonLike: return std::atan(std::sinh(x));  // sech x = cos z
    case ProfileKind::ReciprocalBiquadratic: return std::atan(x);
    case ProfileKind::ReciprocalQuadratic: return std::asinh(x);
    case ProfileKind::Exponential: return std::copysign(-std::expm1(-std::abs(x)), x);
    case ProfileKind::Parabolic: check_parabolic_x(p, x); return std::copysign(x * x, x);
  }
  return 0.0;
}

double x_of_z(const ProfileId& p, double z) {
  check_z(p, z);
  switch (p.kind()) {
    case ProfileKind::SolitonLike: return std::asinh(std::tan(z));
    case ProfileKind::ReciprocalBiquadratic: return std::tan(z);
    case ProfileKind::ReciprocalQuadratic: return std::sinh(z);
    case ProfileKind::Exponential: return std::copysign(-std::log1p(-std::abs(z)), z);
    case ProfileKind::Parabolic: return std::copysign(std::sqrt(std::abs(z)), z);
  }
  return 0.0;
}

double effective_potential(const ProfileId& p, const OrderingParams& o, double z, const ExternalPotential& external) {
  check_z(p, z);
  const auto c = arrangement_constants(p, o);
  const double w = to_double(c.omega);
  double v = 0.0;
  switch (p.kind()) {
    case ProfileKind::SolitonLike:
    case ProfileKind::ReciprocalBiquadratic: {
      if (w != 0.0 && kHalfPi - std::abs(z) < kPoleGuard) fail(ErrorKind::SingularPoint, "tan² pole at |z| = π/2");
      const double t = std::tan(z);
      v = w * t * t + to_double(*c.v0);
      break;
    }
    case ProfileKind::ReciprocalQuadratic: {
      const double s = 1.0 / std::cosh(z);
      v = w * s * s + to_double(*c.v_inf);
      break;
    }
    case ProfileKind::Exponential: {
      const double d = 1.0 - std::abs(z);
      if (w != 0.0 && d < kPoleGuard) fail(ErrorKind::SingularPoint, "pole at |z| = 1");
      v = w == 0.0 ? 0.0 : w / (d * d);
      break;
    }
    case ProfileKind::Parabolic: {
      if (w != 0.0 && std::abs(z) < kPoleGuard) fail(ErrorKind::SingularPoint, "pole at z = 0");
      v = w == 0.0 ? 0.0 : w / (z * z);
      break;
    }
  }
  if (external) v += external(x_of_z(p, z));
  return v;
}

double effective_potential_generic(const ProfileId& p, const OrderingParams& o, double z) {
  const double x = x_of_z(p, z);
  const double h = 1e-3 * (1.0 + std::abs(x));
  const auto m = [&](double t) { return mass(p, t); };
  const double m0 = m(x);
  const double mp1 = m(x + h), mm1 = m(x - h), mp2 = m(x + 2 * h), mm2 = m(x - 2 * h);
  // fourth-order central stencils
  const double d1 = (mm2 - 8.0 * mm1 + 8.0 * mp1 - mp2) / (12.0 * h);
  const double d2 = (-mm2 + 16.0 * mm1 - 30.0 * m0 + 16.0 * mp1 - mp2) / (12.0 * h * h);
  const double g = d1 / m0;             // m′/m
  const double gp = d2 / m0 - g * g;    // (m′/m)′
  const double a = to_double(o.a);
  const double b = to_double(o.b);
  return (-0.5 * (a + b + 0.5) * gp + (a * b + 0.5 * (a + b) + 3.0 / 16.0) * g * g) / m0;
}

double ambiguity_potential(const ProfileId& p, const OrderingParams& o, double x) {
  const auto j = mass_jet(p, x);
  if (!(j.m > 0.0)) fail(ErrorKind::DomainError, "ambiguity potential undefined where m(x) = 0");
  const double a = to_double(o.a);
  const double b = to_double(o.b);
  const double g = j.dm / j.m;
  const double gp = j.d2m / j.m - g * g;
  return -(0.5 * (a + b) * gp - (a * b + 0.5 * (a + b)) * g * g) / j.m;
}

std::complex<double> reconstruct_psi(const ProfileId& p, const std::function<std::complex<double>(double)>& zeta,
                                     double x) {
  const double m = mass(p, x);
  return std::pow(m, 0.25) * zeta(z_of_x(p, x));
}

}  // namespace pdm
