#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pdm/error.hpp"
#include "pdm/spectra.hpp"

using namespace pdm;

namespace {

OrderingParams preset(Preset p) { return OrderingParams::preset(p); }

std::vector<double> energies(const LevelSet& s) {
  std::vector<double> e;
  for (const auto& l : s.levels) e.push_back(l.e_tilde);
  return e;
}

bool throws_kind(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("trigonometric ladders") {
  const auto sol = ProfileId::soliton_like();
  CHECK(energies(levels_trigonometric(sol, preset(Preset::MM), 2)) == std::vector<double>{1, 4, 9});
  CHECK(energies(levels_trigonometric(sol, preset(Preset::BDD), 2)) == std::vector<double>{2, 6, 12});
  CHECK(energies(levels_trigonometric(ProfileId::reciprocal_biquadratic(), preset(Preset::ZK), 2)) ==
        std::vector<double>{0, 3, 8});

  const auto s = levels_trigonometric(sol, preset(Preset::BDD), 5);
  REQUIRE(s.levels.size() == 6);
  CHECK_FALSE(s.exhaustive);
  for (const auto& l : s.levels) {
    CHECK(l.parity == (l.n % 2 == 0 ? Parity::Even : Parity::Odd));
    CHECK_FALSE(l.k.has_value());
  }
  CHECK(throws_kind(ErrorKind::DomainError, [&] { levels_trigonometric(sol, preset(Preset::MM), -1); }));
}

TEST_CASE("levels lie above the well bottom and are strictly increasing") {
  for (auto k : {ProfileKind::SolitonLike, ProfileKind::ReciprocalBiquadratic}) {
    const auto p = ProfileId::of(k);
    for (auto o : kAllPresets) {
      const auto cls = classify(p, preset(o));
      if (cls.kind != SpectrumKind::DiscreteWithMinimum) continue;
      const auto s = levels_trigonometric(p, preset(o), 8);
      const double v0 = to_double(*arrangement_constants(p, preset(o)).v0);
      CHECK(s.levels.front().e_tilde > v0);
      for (std::size_t i = 1; i < s.levels.size(); ++i) CHECK(s.levels[i].e_tilde > s.levels[i - 1].e_tilde);
    }
  }
}

TEST_CASE("arrangements without acceptable states are rejected") {
  CHECK(throws_kind(ErrorKind::NotDiscrete,
                    [] { levels_trigonometric(ProfileId::soliton_like(), OrderingParams::preset(Preset::GW), 3); }));
  CHECK(throws_kind(ErrorKind::NotDiscrete, [] { exponential_levels(OrderingParams::preset(Preset::GW), 3); }));
  CHECK(throws_kind(ErrorKind::DomainError, [] {
    levels_trigonometric(ProfileId::reciprocal_quadratic(), OrderingParams::preset(Preset::BDD), 3);
  }));
}

TEST_CASE("reciprocal quadratic bound states") {
  const auto zk = bound_levels_recip_quadratic(preset(Preset::ZK));
  CHECK(zk.exhaustive);
  REQUIRE(zk.levels.size() == 1);
  CHECK(zk.levels[0].e_tilde == doctest::Approx(0.0).scale(1.0));
  CHECK(zk.levels[0].e_tilde < scattering_threshold(preset(Preset::ZK)));

  // ab = 1/16 sits exactly on the n < 2√(ab) − 1/2 boundary
  CHECK(bound_levels_recip_quadratic(preset(Preset::MM)).levels.empty());
  CHECK(bound_levels_recip_quadratic(preset(Preset::MM)).exhaustive);
  CHECK(bound_levels_recip_quadratic(preset(Preset::BDD)).levels.empty());
  CHECK(bound_levels_recip_quadratic(preset(Preset::GW)).levels.empty());
  CHECK(bound_levels_recip_quadratic(OrderingParams::custom(Rational(1, 2), Rational(-1))).levels.empty());

  // a = b = −2: 2√(ab) − 1/2 = 3.5, so n = 0..3, spaced by 4√(ab) − 2 − 2n = 6 − 2n.
  const auto deep = bound_levels_recip_quadratic(OrderingParams::custom(Rational(-2), Rational(-2)));
  REQUIRE(deep.levels.size() == 4);
  for (int n = 0; n < 3; ++n) {
    CHECK(deep.levels[n + 1].e_tilde - deep.levels[n].e_tilde == doctest::Approx(6.0 - 2.0 * n));
  }
  CHECK(deep.levels.back().e_tilde < scattering_threshold(OrderingParams::custom(Rational(-2), Rational(-2))));
}

TEST_CASE("scattering thresholds") {
  CHECK(scattering_threshold(preset(Preset::ZK)) == 0.25);
  CHECK(scattering_threshold(preset(Preset::MM)) == 0.0);
  CHECK(scattering_threshold(preset(Preset::GW)) == -0.75);
}

TEST_CASE("exponential quantization roots") {
  // Reference roots of J_α(k) + 2kJ′_α(k) from mpmath findroot at 40 digits.
  const double alpha0[] = {0.94077056394973735, 3.9593711850125742, 7.0863808479617308, 10.22245839663869};
  const double alpha1[] = {2.1658712714887512, 5.4274332017971672, 8.5954263062834977, 11.748925992749048};

  const auto zk = exponential_levels(preset(Preset::ZK), 4);
  const auto lk = exponential_levels(preset(Preset::LK), 4);
  const auto mm = exponential_levels(preset(Preset::MM), 4);
  const auto bdd = exponential_levels(preset(Preset::BDD), 4);
  REQUIRE(zk.levels.size() == 4);
  REQUIRE(mm.levels.size() == 4);
  REQUIRE(bdd.levels.size() == 4);
  for (int n = 0; n < 4; ++n) {
    CHECK(*zk.levels[n].k == doctest::Approx(alpha0[n]).epsilon(1e-10));
    CHECK(*lk.levels[n].k == *zk.levels[n].k);
    // α = 1/2 reduces the condition to cos k = 0
    CHECK(*mm.levels[n].k == doctest::Approx((2 * n + 1) * std::numbers::pi / 2).epsilon(1e-10));
    CHECK(*bdd.levels[n].k == doctest::Approx(alpha1[n]).epsilon(1e-10));
    CHECK(zk.levels[n].e_tilde == doctest::Approx(alpha0[n] * alpha0[n]).epsilon(1e-10));
    CHECK(zk.levels[n].n == n);
    CHECK(zk.levels[n].parity == Parity::Even);

    // ZK ≤ MM ≤ BDD level by level
    CHECK(zk.levels[n].e_tilde < mm.levels[n].e_tilde);
    CHECK(mm.levels[n].e_tilde < bdd.levels[n].e_tilde);
  }
  for (const auto* s : {&zk, &mm, &bdd}) {
    const double alpha = s == &zk ? 0.0 : (s == &mm ? 0.5 : 1.0);
    for (const auto& l : s->levels) CHECK(std::abs(exponential_quantization(alpha, *l.k)) <= 1e-9);
  }
}

TEST_CASE("exponential quantization function") {
  // α = 1/2: the sin k terms of J and 2kJ′ cancel, leaving 2√(2k/π) cos k
  for (double k : {0.3, 1.7, 4.4}) {
    CHECK(exponential_quantization(0.5, k) ==
          doctest::Approx(2.0 * std::sqrt(2.0 * k / std::numbers::pi) * std::cos(k)).epsilon(1e-12));
  }
  CHECK(throws_kind(ErrorKind::DomainError, [] { exponential_quantization(0.0, 0.0); }));
  CHECK(exponential_levels(preset(Preset::BDD), 0).levels.empty());
}

TEST_CASE("level sets are deterministic") {
  const auto a = exponential_levels(preset(Preset::ZK), 6);
  const auto b = exponential_levels(preset(Preset::ZK), 6);
  for (std::size_t i = 0; i < a.levels.size(); ++i) CHECK(a.levels[i].e_tilde == b.levels[i].e_tilde);
}
