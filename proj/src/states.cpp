#include "pdm/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"
#include "pdm/transform.hpp"

namespace pdm {

namespace {

using cd = std::complex<double>;
using specfun::BesselKind;

// n = 2k (even, μ = 0) or 2k + 1 (odd, μ = 1/2).
struct Sector {
  int k;
  double mu;
  double gamma;  // 2μ + 1/2
};

Sector sector_of(int n) {
  const double mu = n % 2 == 0 ? 0.0 : 0.5;
  return {n / 2, mu, 2.0 * mu + 0.5};
}

Sector sector_of(Parity p) { return sector_of(p == Parity::Odd ? 1 : 0); }

// x^{2μ} keeping the sign for the odd sector.
double odd_factor(double x, double mu) { return mu == 0.0 ? 1.0 : x; }

// log sech|x| without overflow.
double log_sech(double x) {
  const double ax = std::abs(x);
  return std::log(2.0) - ax - std::log1p(std::exp(-2.0 * ax));
}

double checked_real(const specfun::SpecFunResult& r) { return r.value.real(); }

}  // namespace

EigenState trigonometric_state(const ProfileId& profile, const OrderingParams& ordering, int n) {
  if (n < 0) fail(ErrorKind::DomainError, "quantum number must be non-negative");
  const auto levels = levels_trigonometric(profile, ordering, n);
  const auto& lv = levels.levels.back();
  return {profile, ordering, StateKind::Trigonometric, n, lv.parity, lv.e_tilde, {}, false, 1.0};
}

EigenState recip_quadratic_bound_state(const OrderingParams& ordering, int n) {
  const auto levels = bound_levels_recip_quadratic(ordering);
  if (n < 0 || n >= static_cast<int>(levels.levels.size())) {
    fail(ErrorKind::NotDiscrete, "reciprocal quadratic with ordering " + ordering.name() + " has " +
                                     std::to_string(levels.levels.size()) + " bound state(s); n = " +
                                     std::to_string(n) + " does not exist");
  }
  const auto& lv = levels.levels[static_cast<std::size_t>(n)];
  return {ProfileId::reciprocal_quadratic(), ordering, StateKind::RecipQuadraticBound, n, lv.parity, lv.e_tilde, {},
          false, 1.0};
}

EigenState recip_quadratic_scattering_state(const OrderingParams& ordering, double e_tilde, Parity parity) {
  const double threshold = scattering_threshold(ordering);
  if (!(e_tilde > threshold)) {
    fail(ErrorKind::InvalidEnergy, "scattering states need E > V_inf = " + std::to_string(threshold) +
                                       (e_tilde == threshold ? " (E = V_inf is the trivial solution)" : ""));
  }
  if (parity == Parity::None) fail(ErrorKind::DomainError, "scattering state parity must be even or odd");
  return {ProfileId::reciprocal_quadratic(), ordering, StateKind::RecipQuadraticScattering, -1, parity, e_tilde, {},
          false, 1.0};
}

EigenState exponential_state(const OrderingParams& ordering, int n) {
  if (n < 0) fail(ErrorKind::DomainError, "quantum number must be non-negative");
  const auto levels = exponential_levels(ordering, n + 1);
  const auto& lv = levels.levels.back();
  return {ProfileId::exponential(), ordering, StateKind::Exponential, n, Parity::Even, lv.e_tilde, lv.k, false, 1.0};
}

EigenState parabolic_state(const OrderingParams& ordering, double e_tilde, double ell) {
  const auto profile = ProfileId::parabolic(ell);
  const Rational w = omega_of(ProfileKind::Parabolic, ordering);
  if (w < Rational(0)) {
    fail(ErrorKind::InvalidOrdering, "parabolic profile with ordering " + ordering.name() +
                                         " has omega < 0: no physically acceptable states");
  }
  if (w == Rational(0) && e_tilde != 0.0) fail(ErrorKind::InvalidEnergy, "omega = 0 admits only E = 0");
  return {profile, ordering, StateKind::Parabolic, 0, Parity::Even, e_tilde, {}, false, 1.0};
}

double eval_trigonometric(const EigenState& s, double x) {
  if (s.kind != StateKind::Trigonometric) fail(ErrorKind::NotDiscrete, "not a trigonometric eigenstate");
  const auto c = arrangement_constants(s.profile, s.ordering);
  const double nu = c.nu->real();
  const auto sec = sector_of(s.n);
  const double a = 2.0 * sec.mu + 0.5 + sec.k;
  const double b = 2.0 * nu - 0.5 - sec.k;
  double pre = 0.0;
  double y = 0.0;
  if (s.profile.is(ProfileKind::SolitonLike)) {
    const double t = std::tanh(x);
    y = t * t;
    pre = odd_factor(t, sec.mu) * std::exp((2.0 * nu + 0.5) * log_sech(x));
  } else {
    const double r = 1.0 + x * x;
    y = x * x / r;
    pre = odd_factor(x, sec.mu) * std::pow(r, -(sec.mu + nu + 0.5));
  }
  return s.norm_constant * pre * checked_real(specfun::gauss_2f1(a, b, sec.gamma, y));
}

cd eval_recip_quadratic(const EigenState& s, double x) {
  const double r = 1.0 + x * x;
  const double y = x * x / r;
  const auto c = arrangement_constants(s.profile, s.ordering);
  const cd sq = *c.sqrt_ab;
  if (s.kind == StateKind::RecipQuadraticBound) {
    const auto sec = sector_of(s.n);
    const double sr = sq.real();
    const double pre = odd_factor(x, sec.mu) * std::pow(r, sec.k - sr);
    const auto f = specfun::gauss_2f1(2.0 * sr - sec.k, -static_cast<double>(sec.k), sec.gamma, y);
    return s.norm_constant * pre * f.value.real();
  }
  if (s.kind != StateKind::RecipQuadraticScattering) fail(ErrorKind::DomainError, "not a reciprocal quadratic state");
  const auto sec = sector_of(s.parity);
  const double eps = s.e_tilde - to_double(*c.v_inf);
  const cd nu(0.0, -0.5 * std::sqrt(eps));
  const cd p = sec.mu + nu + 0.25;
  const cd pre = odd_factor(x, sec.mu) * std::exp(-p * std::log(r));
  return s.norm_constant * pre * specfun::gauss_2f1(p + sq, p - sq, sec.gamma, y).value;
}

double eval_exponential(const EigenState& s, double x) {
  if (s.kind != StateKind::Exponential) fail(ErrorKind::NotDiscrete, "not an exponential-profile eigenstate");
  const double alpha = arrangement_constants(s.profile, s.ordering).alpha->real();
  const double e = std::exp(-std::abs(x));
  return s.norm_constant * e * specfun::bessel(BesselKind::J, alpha, *s.k * e).value.real();
}

double eval_parabolic(const OrderingParams& ordering, double e_tilde, double x, double ell) {
  const auto state = parabolic_state(ordering, e_tilde, ell);
  if (!(std::abs(x) <= ell)) fail(ErrorKind::DomainError, "parabolic state evaluated outside |x| <= ell");
  const auto c = arrangement_constants(state.profile, ordering);
  const double ax = std::abs(x);
  if (c.omega == Rational(0)) return std::sqrt(2.0 * ax);  // ζ = 1, ψ = m^{1/4}
  const double alpha = c.alpha->real();
  if (e_tilde == 0.0) return std::pow(ax, 1.5 + 2.0 * alpha);
  const double arg = std::sqrt(std::abs(e_tilde)) * x * x;
  const auto kind = e_tilde > 0.0 ? BesselKind::J : BesselKind::I;
  return std::pow(ax, 1.5) * specfun::bessel(kind, alpha, arg).value.real();
}

cd eval(const EigenState& s, double x) {
  switch (s.kind) {
    case StateKind::Trigonometric: return eval_trigonometric(s, x);
    case StateKind::RecipQuadraticBound:
    case StateKind::RecipQuadraticScattering: return eval_recip_quadratic(s, x);
    case StateKind::Exponential: return eval_exponential(s, x);
    case StateKind::Parabolic:
      return s.norm_constant * eval_parabolic(s.ordering, s.e_tilde, x, s.profile.ell());
  }
  return 0.0;
}

cd eval_zeta(const EigenState& s, double z) {
  const double x = x_of_z(s.profile, z);
  const double m = mass(s.profile, x);
  if (m == 0.0) return 0.0;  // parabolic origin: ψ vanishes faster than m^{1/4}
  return eval(s, x) / std::pow(m, 0.25);
}

double derivative_jump_exponential(const EigenState& s) {
  if (s.kind != StateKind::Exponential) fail(ErrorKind::NotDiscrete, "not an exponential-profile eigenstate");
  const double alpha = arrangement_constants(s.profile, s.ordering).alpha->real();
  // ψ′(0+) = −J_α(k) − kJ′_α(k), and the quantization condition sets kJ′_α(k) = −J_α(k)/2.
  return -0.5 * s.norm_constant * specfun::bessel(BesselKind::J, alpha, *s.k).value.real();
}

double density(const EigenState& s, double x) { return std::norm(eval(s, x)); }

double norm_squared(const EigenState& s) {
  using boost::math::quadrature::gauss_kronrod;
  const auto rho = [&s](double x) { return density(s, x); };
  // Every density here is even, so integrate one half-line.
  const double hi = s.kind == StateKind::Parabolic ? s.profile.ell() : std::numeric_limits<double>::infinity();
  double err = 0.0;
  const double half = gauss_kronrod<double, 61>::integrate(rho, 0.0, hi, 20, 1e-13, &err);
  return 2.0 * half;
}

EigenState normalize(const EigenState& s) {
  if (s.kind == StateKind::RecipQuadraticScattering) {
    fail(ErrorKind::NotNormalizable, "continuum states cannot be normalized to one");
  }
  const double n2 = norm_squared(s);
  if (!(n2 > 0.0) || !std::isfinite(n2)) fail(ErrorKind::NotNormalizable, "state has zero or infinite norm");
  EigenState out = s;
  out.norm_constant = s.norm_constant / std::sqrt(n2);
  out.normalized = true;
  return out;
}

}  // namespace pdm
