#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "pdm/error.hpp"
#include "pdm/oracle.hpp"

using namespace pdm;

namespace {

OrderingParams preset(Preset p) { return OrderingParams::preset(p); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception thrown");
  return ErrorKind::DomainError;
}

LevelSet first_levels(const ProfileId& p, Preset o, int count) {
  return levels_trigonometric(p, OrderingParams::preset(o), count - 1);
}

}  // namespace

TEST_CASE("tridiagonal eigenvalues of the discrete Laplacian") {
  const int n = 200;
  Tridiagonal t{Eigen::VectorXd::Constant(n, 2.0), Eigen::VectorXd::Constant(n - 1, -1.0)};
  const auto bis = lowest_eigenvalues(t, 5);
  const auto ql = lowest_eigenvalues_ql(t, 5);
  REQUIRE(bis.size() == 5);
  for (int k = 1; k <= 5; ++k) {
    const double exact = 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1));
    CHECK(bis[k - 1] == doctest::Approx(exact).epsilon(1e-12));
    CHECK(ql[k - 1] == doctest::Approx(exact).epsilon(1e-10));
  }
  const auto v = eigenvector(t, bis[0]);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK((t.diag.cwiseProduct(v) + (Eigen::VectorXd(n) << t.off.cwiseProduct(v.tail(n - 1)), 0.0).finished() +
         (Eigen::VectorXd(n) << 0.0, t.off.cwiseProduct(v.head(n - 1))).finished() - bis[0] * v)
            .norm() <= 1e-10);
}

TEST_CASE("z-space oracle reproduces the trigonometric ladders") {
  const GridSpec grid;  // 4000 points
  for (auto k : {ProfileKind::SolitonLike, ProfileKind::ReciprocalBiquadratic}) {
    for (auto o : {Preset::BDD, Preset::MM}) {
      const auto p = ProfileId::of(k);
      const auto t0 = std::chrono::steady_clock::now();
      const auto fd = fd_solve_z(p, preset(o), grid, 3);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto report = compare(first_levels(p, o, 3), fd.eigenvalues, 1e-3);
      CHECK(report.pass);
      for (const auto& c : report.compared) CHECK(c.rel_error <= 1e-3);
      CHECK(fd.ql_discrepancy <= 1e-8);
      CHECK(secs < 10.0);
    }
  }
}

TEST_CASE("z-space oracle: reciprocal quadratic ZK ground state") {
  const auto fd = fd_spectrum_z(ProfileId::reciprocal_quadratic(), preset(Preset::ZK), GridSpec{}, 1);
  REQUIRE(fd.size() == 1);
  CHECK(std::abs(fd[0] - bound_levels_recip_quadratic(preset(Preset::ZK)).levels[0].e_tilde) <= 2e-3);
}

TEST_CASE("z-space oracle: exponential levels after square root") {
  for (auto o : {Preset::BDD, Preset::ZK, Preset::MM}) {
    const auto analytic = exponential_levels(preset(o), 3);
    const auto fd = fd_spectrum_z(ProfileId::exponential(), preset(o), GridSpec{}, 3, Sector::Even);
    REQUIRE(fd.size() == 3);
    for (int n = 0; n < 3; ++n) {
      CHECK(std::sqrt(fd[n]) == doctest::Approx(*analytic.levels[n].k).epsilon(1e-4));
    }
  }
}

TEST_CASE("x-space oracle agrees with the analytic ladders") {
  GridSpec grid;
  grid.n_points = 6000;
  const auto sol = ProfileId::soliton_like();
  for (auto o : {Preset::BDD, Preset::MM}) {
    const auto analytic = first_levels(sol, o, 3);
    CHECK(compare(analytic, fd_spectrum_x(sol, preset(o), grid, 3), 1e-3).pass);
    CHECK(compare(analytic, fd_spectrum_x(sol, preset(o), grid, 3, {.unsymmetrized = true}), 1e-3).pass);
    // x-space and z-space agree with each other too
    const auto z = fd_spectrum_z(sol, preset(o), grid, 3);
    const auto x = fd_spectrum_x(sol, preset(o), grid, 3);
    for (int n = 0; n < 3; ++n) CHECK(x[n] == doctest::Approx(z[n]).epsilon(1e-3));
  }
}

TEST_CASE("x-space truncation of the reciprocal biquadratic profile") {
  // MM has ω = 0, so in z the problem is a flat box of width π with levels (n+1)². Cutting
  // x at ±100 shrinks the box to 2·atan(100), which shifts the levels by about 1.3%.
  GridSpec grid;
  grid.n_points = 8000;
  const auto fd = fd_spectrum_x(ProfileId::reciprocal_biquadratic(), preset(Preset::MM), grid, 3);
  const double scale = std::pow(std::numbers::pi / (2.0 * std::atan(100.0)), 2);
  for (int n = 0; n < 3; ++n) CHECK(fd[n] == doctest::Approx((n + 1) * (n + 1) * scale).epsilon(1e-3));
}

TEST_CASE("ambiguity term in x-space") {
  GridSpec grid;
  grid.n_points = 3000;
  const auto sol = ProfileId::soliton_like();
  // BDD has Ũ ≡ 0, so dropping it changes nothing
  const auto with = fd_spectrum_x(sol, preset(Preset::BDD), grid, 3);
  const auto without = fd_spectrum_x(sol, preset(Preset::BDD), grid, 3, {.include_ambiguity = false});
  for (int n = 0; n < 3; ++n) CHECK(with[n] == doctest::Approx(without[n]).epsilon(1e-12));
  // for MM it matters: the levels without Ũ are those of the BDD Hamiltonian
  const auto mm_without = fd_spectrum_x(sol, preset(Preset::MM), grid, 3, {.include_ambiguity = false});
  for (int n = 0; n < 3; ++n) CHECK(mm_without[n] == doctest::Approx(with[n]).epsilon(1e-12));
  const auto mm_with = fd_spectrum_x(sol, preset(Preset::MM), grid, 3);
  CHECK(std::abs(mm_with[0] - mm_without[0]) > 0.5);
}

TEST_CASE("x-space oracle refuses singular mass profiles") {
  CHECK(kind_of([] { fd_spectrum_x(ProfileId::exponential(), OrderingParams::preset(Preset::BDD), GridSpec{}, 2); }) ==
        ErrorKind::SingularInterior);
  CHECK(kind_of([] { fd_spectrum_x(ProfileId::parabolic(2.0), OrderingParams::preset(Preset::BDD), GridSpec{}, 2); }) ==
        ErrorKind::SingularInterior);
}

TEST_CASE("compare") {
  LevelSet a;
  a.levels = {{0, Parity::Even, 1.0, {}}, {1, Parity::Odd, 4.0, {}}};
  CHECK(compare(a, {1.0005, 4.001}, 1e-3).pass);
  CHECK_FALSE(compare(a, {1.0005, 4.01}, 1e-3).pass);
  // sorted before pairing
  CHECK(compare(a, {4.0, 1.0}, 1e-12).pass);
  const auto r = compare(a, {1.0, 4.2}, 1e-3);
  CHECK(r.compared[1].abs_error == doctest::Approx(0.2));
  CHECK(r.compared[1].rel_error == doctest::Approx(0.05));
  CHECK(kind_of([&] { compare(a, {1.0}, 1e-3); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { compare(LevelSet{}, {}, 1e-3); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("second-order convergence under refinement") {
  const auto sol = ProfileId::soliton_like();
  const double exact = 6.0;  // BDD n = 1
  GridSpec coarse, fine;
  coarse.n_points = 1000;
  fine.n_points = 2000;
  const double e1 = std::abs(fd_spectrum_z(sol, preset(Preset::BDD), coarse, 2)[1] - exact);
  const double e2 = std::abs(fd_spectrum_z(sol, preset(Preset::BDD), fine, 2)[1] - exact);
  CHECK(e1 / e2 >= 3.0);
}

TEST_CASE("eigenvector parity") {
  GridSpec grid;
  grid.n_points = 2001;
  const auto fd = fd_solve_z(ProfileId::soliton_like(), preset(Preset::MM), grid, 3, Sector::Full, true);
  REQUIRE(fd.vectors.size() == 3);
  for (int n = 0; n < 3; ++n) {
    const auto& v = fd.vectors[n];
    const Eigen::VectorXd mirrored = v.reverse();
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    CHECK((v - sign * mirrored).norm() <= 1e-6);
  }
}

TEST_CASE("arrangements without a spectrum have no converged ground state") {
  // Soliton GW: the attractive inverse-square pole is stronger than −1/4, so the lowest
  // eigenvalue keeps falling as the wall approaches the pole.
  double prev = INFINITY;
  for (double delta : {1e-2, 1e-3, 1e-4}) {
    GridSpec grid;
    grid.wall_delta = delta;
    const double e0 = fd_spectrum_z(ProfileId::soliton_like(), preset(Preset::GW), grid, 1)[0];
    CHECK(e0 < prev);
    prev = e0;
  }
  CHECK(prev < -100.0);
}
