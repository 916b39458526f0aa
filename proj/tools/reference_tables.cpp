#include "reference_tables.hpp"

namespace pdm::cli {

namespace {

using K = SpectrumKind;
using S = PotentialShape;
using P = Preset;
using R = Rational;

constexpr auto kSol = ProfileKind::SolitonLike;
constexpr auto kBiq = ProfileKind::ReciprocalBiquadratic;
constexpr auto kQua = ProfileKind::ReciprocalQuadratic;
constexpr auto kExp = ProfileKind::Exponential;
constexpr auto kPar = ProfileKind::Parabolic;

}  // namespace

const std::vector<ReferenceArrangement>& reference_arrangements() {
  static const std::vector<ReferenceArrangement> table = {
      {kSol, P::BDD, R(3, 4), R(1, 2), {}, K::DiscreteWithMinimum, S::InfiniteWell},
      {kSol, P::GW, R(-5, 4), R(-1, 2), {}, K::NoSpectrum, S::BottomlessBarrier},
      {kSol, P::ZK, R(-1, 4), R(-1, 2), {}, K::NoSpectrum, S::BottomlessBarrier},
      {kSol, P::LK, R(-1, 4), R(0), {}, K::NoSpectrum, S::BottomlessBarrier},
      {kSol, P::MM, R(0), R(0), {}, K::DiscreteWithMinimum, S::Constant},

      {kBiq, P::BDD, R(2), R(1), {}, K::DiscreteWithMinimum, S::InfiniteWell},
      {kBiq, P::GW, R(-4), R(-1), {}, K::NoSpectrum, S::BottomlessBarrier},
      {kBiq, P::ZK, R(0), R(-1), {}, K::DiscreteWithMinimum, S::Constant},
      {kBiq, P::LK, R(-1), R(0), {}, K::NoSpectrum, S::BottomlessBarrier},
      {kBiq, P::MM, R(0), R(0), {}, K::DiscreteWithMinimum, S::Constant},

      {kQua, P::BDD, R(1, 4), R(1, 2), R(1, 4), K::ContinuousWithMinimum, S::FiniteBarrier},
      {kQua, P::GW, R(1, 4), R(-1, 2), R(-3, 4), K::ContinuousWithMinimum, S::FiniteBarrier},
      {kQua, P::ZK, R(-3, 4), R(-1, 2), R(1, 4), K::ContinuousPlusBound, S::FiniteWell},
      {kQua, P::LK, R(1, 4), R(0), R(-1, 4), K::ContinuousWithMinimum, S::FiniteBarrier},
      {kQua, P::MM, R(0), R(0), R(0), K::ContinuousWithMinimum, S::Constant},

      {kExp, P::BDD, R(3, 4), {}, {}, K::DiscreteWithMinimum, S::InfiniteWell},
      {kExp, P::GW, R(-5, 4), {}, {}, K::NoSpectrum, S::BottomlessBarrier},
      {kExp, P::ZK, R(-1, 4), {}, {}, K::DiscreteWithMinimum, S::BottomlessBarrier},
      {kExp, P::LK, R(-1, 4), {}, {}, K::DiscreteWithMinimum, S::BottomlessBarrier},
      {kExp, P::MM, R(0), {}, {}, K::DiscreteWithMinimum, S::Constant},

      {kPar, P::BDD, R(5, 16), {}, {}, K::ExternallyDetermined, S::InfiniteBarrier},
      {kPar, P::GW, R(-7, 16), {}, {}, K::NoSpectrum, S::BottomlessWell},
      {kPar, P::ZK, R(-3, 16), {}, {}, K::NoSpectrum, S::BottomlessWell},
      {kPar, P::LK, R(-1, 16), {}, {}, K::NoSpectrum, S::BottomlessWell},
      {kPar, P::MM, R(0), {}, {}, K::ZeroEnergyOnly, S::Constant},
  };
  return table;
}

}  // namespace pdm::cli
