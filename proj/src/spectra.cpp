#include "pdm/spectra.hpp"

#include <cmath>
#include <string>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm {

std::string_view to_string(Parity p) noexcept {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::None: return "none";
  }
  return "none";
}

LevelSet levels_trigonometric(const ProfileId& profile, const OrderingParams& ordering, int n_max) {
  if (!profile.is(ProfileKind::SolitonLike) && !profile.is(ProfileKind::ReciprocalBiquadratic)) {
    fail(ErrorKind::DomainError, "levels_trigonometric needs the soliton-like or reciprocal biquadratic profile");
  }
  if (n_max < 0) fail(ErrorKind::DomainError, "n_max must be non-negative");
  const auto cls = classify(profile, ordering);
  if (cls.kind != SpectrumKind::DiscreteWithMinimum) {
    fail(ErrorKind::NotDiscrete, std::string(to_string(profile.kind())) + " with ordering " + ordering.name() +
                                     " has no physically acceptable states");
  }
  const auto c = arrangement_constants(profile, ordering);
  const double lambda = 1.0 - 2.0 * c.nu->real();
  const double v0 = to_double(*c.v0);

  LevelSet out;
  out.levels.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double dn = n;
    out.levels.push_back({n, n % 2 == 0 ? Parity::Even : Parity::Odd, dn * dn + 2.0 * lambda * dn + lambda + v0, {}});
  }
  return out;
}

LevelSet bound_levels_recip_quadratic(const OrderingParams& ordering) {
  const auto profile = ProfileId::reciprocal_quadratic();
  const auto c = arrangement_constants(profile, ordering);
  const Rational ab = ordering.a * ordering.b;
  LevelSet out;
  out.exhaustive = true;
  if (ab < Rational(0)) return out;

  // n < 2√(ab) − 1/2  ⇔  (2n+1)² < 16ab, decided exactly.
  const double s = c.sqrt_ab->real();
  const double v0 = to_double(*c.v0);
  for (int n = 0; Rational((2 * n + 1) * (2 * n + 1)) < 16 * ab; ++n) {
    const double dn = n;
    const double e = -dn * dn + (4.0 * s - 1.0) * dn + 2.0 * s - 0.5 + v0;
    out.levels.push_back({n, n % 2 == 0 ? Parity::Even : Parity::Odd, e, {}});
  }
  return out;
}

double scattering_threshold(const OrderingParams& ordering) {
  return to_double(*arrangement_constants(ProfileId::reciprocal_quadratic(), ordering).v_inf);
}

double exponential_quantization(double alpha, double k) {
  if (!(k > 0.0)) fail(ErrorKind::DomainError, "quantization condition needs k > 0");
  const auto jy = specfun::bessel_jy(alpha, k);
  return jy.j + 2.0 * k * jy.jp;
}

LevelSet exponential_levels(const OrderingParams& ordering, int count) {
  if (count < 0) fail(ErrorKind::DomainError, "count must be non-negative");
  const auto profile = ProfileId::exponential();
  const auto cls = classify(profile, ordering);
  if (cls.kind != SpectrumKind::DiscreteWithMinimum) {
    fail(ErrorKind::NotDiscrete, "exponential profile with ordering " + ordering.name() + " has no valid solutions");
  }
  const double alpha = arrangement_constants(profile, ordering).alpha->real();
  const auto f = [alpha](double k) { return exponential_quantization(alpha, k); };

  constexpr double kStep = 0.01;
  constexpr double kTol = 1e-12;
  LevelSet out;
  double k_lo = kStep;
  double f_lo = f(k_lo);
  // Roots interlace with Bessel zeros (spacing ~π), so a 0.01 scan cannot skip a pair.
  for (int i = 2; static_cast<int>(out.levels.size()) < count; ++i) {
    const double k_hi = kStep * i;
    const double f_hi = f(k_hi);
    double root = std::nan("");
    if (f_lo == 0.0) {
      root = k_lo;
    } else if (f_lo * f_hi < 0.0) {
      double lo = k_lo, hi = k_hi, flo = f_lo;
      while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      root = 0.5 * (lo + hi);
    }
    if (!std::isnan(root) && (out.levels.empty() || root - *out.levels.back().k > 1e-8)) {
      const int n = static_cast<int>(out.levels.size());
      out.levels.push_back({n, Parity::Even, root * root, root});
    }
    k_lo = k_hi;
    f_lo = f_hi;
  }
  return out;
}

}  // namespace pdm
