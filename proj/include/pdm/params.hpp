#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pdm {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-1/4" or a terminating decimal such as "-0.25" into an exact rational.
/// Throws Error(DomainError) on anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

enum class Preset { BDD, GW, ZK, LK, MM };

inline constexpr Preset kAllPresets[] = {Preset::BDD, Preset::GW, Preset::ZK, Preset::LK, Preset::MM};

std::string_view to_string(Preset p) noexcept;

/// von Roos ordering pair (a, b).
struct OrderingParams {
  Rational a;
  Rational b;
  std::optional<Preset> label;

  static OrderingParams preset(Preset p);
  static OrderingParams custom(Rational a, Rational b);

  std::string name() const;
};

/// Case-insensitive preset lookup ("bdd", "ZK", ...).
OrderingParams parse_ordering(std::string_view name);

enum class ProfileKind { SolitonLike, ReciprocalBiquadratic, ReciprocalQuadratic, Exponential, Parabolic };

inline constexpr ProfileKind kAllProfileKinds[] = {ProfileKind::SolitonLike, ProfileKind::ReciprocalBiquadratic,
                                                   ProfileKind::ReciprocalQuadratic, ProfileKind::Exponential,
                                                   ProfileKind::Parabolic};

std::string_view to_string(ProfileKind k) noexcept;

/// Mass profile selector. Only Parabolic carries a parameter: the half-width ell of the
/// region |x| <= ell it is restricted to.
class ProfileId {
 public:
  static ProfileId soliton_like() { return ProfileId(ProfileKind::SolitonLike, 0.0); }
  static ProfileId reciprocal_biquadratic() { return ProfileId(ProfileKind::ReciprocalBiquadratic, 0.0); }
  static ProfileId reciprocal_quadratic() { return ProfileId(ProfileKind::ReciprocalQuadratic, 0.0); }
  static ProfileId exponential() { return ProfileId(ProfileKind::Exponential, 0.0); }
  static ProfileId parabolic(double ell);
  static ProfileId of(ProfileKind kind, double ell = 2.0);

  ProfileKind kind() const noexcept { return kind_; }
  double ell() const noexcept { return ell_; }
  bool is(ProfileKind k) const noexcept { return kind_ == k; }

 private:
  ProfileId(ProfileKind kind, double ell) : kind_(kind), ell_(ell) {}
  ProfileKind kind_;
  double ell_;
};

/// Parses "soliton", "biquadratic", "quadratic", "exponential", "parabolic" (plus the long
/// enum spellings). `ell` is used for the parabolic profile only.
ProfileId parse_profile(std::string_view name, double ell = 2.0);

/// Constants of one (profile x ordering) arrangement. Rationals stay exact; the
/// square-root-derived quantities are stored as complex numbers whose imaginary part is
/// nonzero only when the radicand is negative.
struct ArrangementConstants {
  Rational omega;
  std::optional<Rational> v0;
  std::optional<Rational> v_inf;
  std::optional<std::complex<double>> alpha;    // ½√(1+4ω): exponential, parabolic
  std::optional<std::complex<double>> nu;       // (1−√(1+4ω))/4: soliton, biquadratic
  std::optional<std::complex<double>> sqrt_ab;  // reciprocal quadratic
  Rational mu_plus{1, 2};
  Rational mu_minus{0};
};

ArrangementConstants arrangement_constants(const ProfileId& profile, const OrderingParams& ordering);

/// ω alone, exact.
Rational omega_of(ProfileKind kind, const OrderingParams& ordering);

/// ½√(1+4ω), principal branch; purely imaginary when ω < −1/4.
std::complex<double> half_sqrt_one_plus_four(const Rational& omega);

enum class SpectrumKind {
  DiscreteWithMinimum,
  ContinuousWithMinimum,
  ContinuousPlusBound,
  NoSpectrum,
  ZeroEnergyOnly,
  ExternallyDetermined,
};

enum class PotentialShape {
  InfiniteWell,
  InfiniteBarrier,
  FiniteWell,
  FiniteBarrier,
  BottomlessBarrier,
  BottomlessWell,
  Constant,
};

std::string_view to_string(SpectrumKind k) noexcept;
std::string_view to_string(PotentialShape s) noexcept;
/// Table-style acronym: IW, IB, FW, FB, BB, BW, cons.
std::string_view acronym(PotentialShape s) noexcept;

struct SpectrumClass {
  SpectrumKind kind;
  PotentialShape effective_potential_shape;
  /// Soliton/biquadratic with −1/4 < ω < 0: discrete spectrum obtained by factor
  /// cancellation, never validated numerically.
  bool experimental = false;
  /// Reciprocal quadratic with ab < 0: √(ab) imaginary, treated as having no bound states.
  bool outside_presets = false;

  bool has_states() const noexcept { return kind != SpectrumKind::NoSpectrum; }
  bool operator==(const SpectrumClass&) const = default;
};

SpectrumClass classify(const ProfileId& profile, const OrderingParams& ordering);

struct ScaleParams {
  double epsilon;  // length, m
  double m0;       // mass, kg

  ScaleParams(double epsilon_m, double m0_kg);
};

namespace constants {
inline constexpr double hbar = 1.054571817e-34;            // J s (CODATA 2018, exact-derived)
inline constexpr double electron_mass = 9.1093837015e-31;  // kg (CODATA 2018)
}  // namespace constants

/// Ẽ -> E in joules: E = Ẽ ħ² / (2 ε² m0).
double to_physical_energy(double e_tilde, const ScaleParams& scale);
/// E in joules -> Ẽ.
double from_physical_energy(double energy_joule, const ScaleParams& scale);

}  // namespace pdm
