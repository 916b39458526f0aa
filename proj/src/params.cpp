#include "pdm/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "pdm/error.hpp"

namespace pdm {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorKind::DomainError, "not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(ErrorKind::DomainError, "empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(s.substr(0, slash), text);
    const auto den = parse_int(s.substr(slash + 1), text);
    if (den == 0) fail(ErrorKind::DomainError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = !s.empty() && s.front() == '-';
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (frac_part.size() > 15) fail(ErrorKind::DomainError, "too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t ip = 0;
    if (!(int_part.empty() || int_part == "-" || int_part == "+")) ip = parse_int(int_part, text);
    std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (fp < 0) fail(ErrorKind::DomainError, "not a rational number: '" + std::string(text) + "'");
    Rational r(std::abs(ip) * scale + fp, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(s, text));
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(Preset p) noexcept {
  switch (p) {
    case Preset::BDD: return "BDD";
    case Preset::GW: return "GW";
    case Preset::ZK: return "ZK";
    case Preset::LK: return "LK";
    case Preset::MM: return "MM";
  }
  return "?";
}

OrderingParams OrderingParams::preset(Preset p) {
  switch (p) {
    case Preset::BDD: return {Rational(0), Rational(0), p};
    case Preset::GW: return {Rational(-1), Rational(0), p};
    case Preset::ZK: return {Rational(-1, 2), Rational(-1, 2), p};
    case Preset::LK: return {Rational(0), Rational(-1, 2), p};
    case Preset::MM: return {Rational(-1, 4), Rational(-1, 4), p};
  }
  fail(ErrorKind::DomainError, "unknown preset");
}

OrderingParams OrderingParams::custom(Rational a, Rational b) { return {a, b, std::nullopt}; }

std::string OrderingParams::name() const {
  if (label) return std::string(to_string(*label));
  return "(" + format_rational(a) + "," + format_rational(b) + ")";
}

OrderingParams parse_ordering(std::string_view name) {
  const auto n = lower(name);
  for (auto p : kAllPresets) {
    if (n == lower(to_string(p))) return OrderingParams::preset(p);
  }
  fail(ErrorKind::DomainError, "unknown ordering '" + std::string(name) + "' (expected bdd, gw, zk, lk or mm)");
}

std::string_view to_string(ProfileKind k) noexcept {
  switch (k) {
    case ProfileKind::SolitonLike: return "soliton";
    case ProfileKind::ReciprocalBiquadratic: return "biquadratic";
    case ProfileKind::ReciprocalQuadratic: return "quadratic";
    case ProfileKind::Exponential: return "exponential";
    case ProfileKind::Parabolic: return "parabolic";
  }
  return "?";
}

ProfileId ProfileId::parabolic(double ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    fail(ErrorKind::DomainError, "parabolic profile requires a finite half-width ell > 0");
  }
  return ProfileId(ProfileKind::Parabolic, ell);
}

ProfileId ProfileId::of(ProfileKind kind, double ell) {
  if (kind == ProfileKind::Parabolic) return parabolic(ell);
  return ProfileId(kind, 0.0);
}

ProfileId parse_profile(std::string_view name, double ell) {
  const auto n = lower(name);
  if (n == "soliton" || n == "soliton-like" || n == "solitonlike") return ProfileId::soliton_like();
  if (n == "biquadratic" || n == "reciprocal-biquadratic" || n == "reciprocalbiquadratic")
    return ProfileId::reciprocal_biquadratic();
  if (n == "quadratic" || n == "reciprocal-quadratic" || n == "reciprocalquadratic")
    return ProfileId::reciprocal_quadratic();
  if (n == "exponential" || n == "exp") return ProfileId::exponential();
  if (n == "parabolic") return ProfileId::parabolic(ell);
  fail(ErrorKind::DomainError, "unknown profile '" + std::string(name) + "'");
}

Rational omega_of(ProfileKind kind, const OrderingParams& o) {
  const Rational ab = o.a * o.b;
  const Rational s = o.a + o.b;
  switch (kind) {
    case ProfileKind::SolitonLike:
    case ProfileKind::Exponential: return 4 * ab + 2 * s + Rational(3, 4);
    case ProfileKind::ReciprocalBiquadratic: return 16 * ab + 6 * s + 2;
    case ProfileKind::ReciprocalQuadratic: return Rational(1, 4) - 4 * ab;
    case ProfileKind::Parabolic: return ab + Rational(3, 4) * s + Rational(5, 16);
  }
  fail(ErrorKind::DomainError, "unknown profile");
}

std::complex<double> half_sqrt_one_plus_four(const Rational& omega) {
  return 0.5 * std::sqrt(std::complex<double>(1.0 + 4.0 * to_double(omega), 0.0));
}

ArrangementConstants arrangement_constants(const ProfileId& profile, const OrderingParams& o) {
  ArrangementConstants c;
  c.omega = omega_of(profile.kind(), o);
  const Rational s = o.a + o.b;
  const Rational ab = o.a * o.b;
  switch (profile.kind()) {
    case ProfileKind::SolitonLike:
      c.v0 = s + Rational(1, 2);
      c.nu = 0.5 * (0.5 - half_sqrt_one_plus_four(c.omega));
      break;
    case ProfileKind::ReciprocalBiquadratic:
      c.v0 = 2 * s + 1;
      c.nu = 0.5 * (0.5 - half_sqrt_one_plus_four(c.omega));
      break;
    case ProfileKind::ReciprocalQuadratic:
      c.v0 = s + Rational(1, 2);
      c.v_inf = 4 * ab + s + Rational(1, 4);
      c.sqrt_ab = std::sqrt(std::complex<double>(to_double(ab), 0.0));
      break;
    case ProfileKind::Exponential:
    case ProfileKind::Parabolic:
      c.alpha = half_sqrt_one_plus_four(c.omega);
      break;
  }
  return c;
}

std::string_view to_string(SpectrumKind k) noexcept {
  switch (k) {
    case SpectrumKind::DiscreteWithMinimum: return "DiscreteWithMinimum";
    case SpectrumKind::ContinuousWithMinimum: return "ContinuousWithMinimum";
    case SpectrumKind::ContinuousPlusBound: return "ContinuousPlusBound";
    case SpectrumKind::NoSpectrum: return "NoSpectrum";
    case SpectrumKind::ZeroEnergyOnly: return "ZeroEnergyOnly";
    case SpectrumKind::ExternallyDetermined: return "ExternallyDetermined";
  }
  return "?";
}

std::string_view to_string(PotentialShape s) noexcept {
  switch (s) {
    case PotentialShape::InfiniteWell: return "InfiniteWell";
    case PotentialShape::InfiniteBarrier: return "InfiniteBarrier";
    case PotentialShape::FiniteWell: return "FiniteWell";
    case PotentialShape::FiniteBarrier: return "FiniteBarrier";
    case PotentialShape::BottomlessBarrier: return "BottomlessBarrier";
    case PotentialShape::BottomlessWell: return "BottomlessWell";
    case PotentialShape::Constant: return "Constant";
  }
  return "?";
}

std::string_view acronym(PotentialShape s) noexcept {
  switch (s) {
    case PotentialShape::InfiniteWell: return "IW";
    case PotentialShape::InfiniteBarrier: return "IB";
    case PotentialShape::FiniteWell: return "FW";
    case PotentialShape::FiniteBarrier: return "FB";
    case PotentialShape::BottomlessBarrier: return "BB";
    case PotentialShape::BottomlessWell: return "BW";
    case PotentialShape::Constant: return "cons";
  }
  return "?";
}

SpectrumClass classify(const ProfileId& profile, const OrderingParams& o) {
  const Rational w = omega_of(profile.kind(), o);
  const Rational quarter(1, 4);
  SpectrumClass out{SpectrumKind::NoSpectrum, PotentialShape::Constant};

  switch (profile.kind()) {
    case ProfileKind::SolitonLike:
    case ProfileKind::ReciprocalBiquadratic:
      // ω tan²z + V⁽⁰⁾ on (−π/2, π/2)
      if (w > Rational(0)) {
        out = {SpectrumKind::DiscreteWithMinimum, PotentialShape::InfiniteWell};
      } else if (w == Rational(0)) {
        out = {SpectrumKind::DiscreteWithMinimum, PotentialShape::Constant};
      } else if (w > -quarter) {
        out = {SpectrumKind::DiscreteWithMinimum, PotentialShape::BottomlessBarrier};
        out.experimental = true;
      } else {
        out = {SpectrumKind::NoSpectrum, PotentialShape::BottomlessBarrier};
      }
      break;

    case ProfileKind::ReciprocalQuadratic: {
      // ω sech²z + V⁽∞⁾ on the real line
      const auto shape = w > Rational(0) ? PotentialShape::FiniteBarrier
                               : (w == Rational(0) ? PotentialShape::Constant : PotentialShape::FiniteWell);
      const Rational ab = o.a * o.b;
      if (ab < Rational(0)) {
        out = {SpectrumKind::ContinuousWithMinimum, shape};
        out.outside_presets = true;
      } else if (ab > Rational(1, 16)) {  // 2√(ab) > 1/2
        out = {SpectrumKind::ContinuousPlusBound, shape};
      } else {
        out = {SpectrumKind::ContinuousWithMinimum, shape};
      }
      break;
    }

    case ProfileKind::Exponential:
      // ω/(1−|z|)² on (−1, 1)
      if (w > Rational(0)) {
        out = {SpectrumKind::DiscreteWithMinimum, PotentialShape::InfiniteWell};
      } else if (w == Rational(0)) {
        out = {SpectrumKind::DiscreteWithMinimum, PotentialShape::Constant};
      } else if (w >= -quarter) {
        out = {SpectrumKind::DiscreteWithMinimum, PotentialShape::BottomlessBarrier};
      } else {
        out = {SpectrumKind::NoSpectrum, PotentialShape::BottomlessBarrier};
      }
      break;

    case ProfileKind::Parabolic:
      // ω/z² on (−ℓ², ℓ²)
      if (w > Rational(0)) {
        out = {SpectrumKind::ExternallyDetermined, PotentialShape::InfiniteBarrier};
      } else if (w == Rational(0)) {
        out = {SpectrumKind::ZeroEnergyOnly, PotentialShape::Constant};
      } else {
        out = {SpectrumKind::NoSpectrum, PotentialShape::BottomlessWell};
      }
      break;
  }
  return out;
}

ScaleParams::ScaleParams(double epsilon_m, double m0_kg) : epsilon(epsilon_m), m0(m0_kg) {
  if (!(epsilon > 0.0) || !(m0 > 0.0) || !std::isfinite(epsilon) || !std::isfinite(m0)) {
    fail(ErrorKind::DomainError, "scale parameters must be finite and strictly positive");
  }
}

double to_physical_energy(double e_tilde, const ScaleParams& scale) {
  return e_tilde * (constants::hbar * constants::hbar) / (2.0 * scale.epsilon * scale.epsilon * scale.m0);
}

double from_physical_energy(double energy_joule, const ScaleParams& scale) {
  return energy_joule * (2.0 * scale.epsilon * scale.epsilon * scale.m0) / (constants::hbar * constants::hbar);
}

}  // namespace pdm
