#include "pdm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "pdm/error.hpp"
#include "pdm/transform.hpp"

namespace pdm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Number of eigenvalues strictly below x (LDLᵀ inertia).
int sturm_count(const Tridiagonal& t, double x) {
  const Eigen::Index n = t.diag.size();
  int count = 0;
  double q = t.diag[0] - x;
  const double floor = kEps * (1.0 + std::abs(x));
  for (Eigen::Index i = 0;; ++i) {
    if (q == 0.0) q = -floor;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    q = t.diag[i + 1] - x - t.off[i] * t.off[i] / q;
  }
  return count;
}

std::pair<double, double> gershgorin(const Tridiagonal& t) {
  const Eigen::Index n = t.diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = kEps * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
  return {lo - pad, hi + pad};
}

void check_grid(const GridSpec& g) {
  if (g.n_points < 64) fail(ErrorKind::DomainError, "finite-difference grids need at least 64 points");
  if (!(g.truncation_tol > 0.0) || !(g.wall_delta > 0.0)) {
    fail(ErrorKind::DomainError, "truncation_tol and wall_delta must be positive");
  }
}

// Dirichlet grid on [lo, hi] with n interior points.
struct PlainGrid {
  Eigen::VectorXd z;
  double h;
};

PlainGrid plain_grid(double lo, double hi, int n) {
  const double h = (hi - lo) / (n + 1);
  PlainGrid g{Eigen::VectorXd(n), h};
  for (int j = 0; j < n; ++j) g.z[j] = lo + (j + 1) * h;
  return g;
}

template <class V>
Tridiagonal laplacian_plus(const Eigen::VectorXd& z, double h, V&& potential) {
  const Eigen::Index n = z.size();
  Tridiagonal t{Eigen::VectorXd(n), Eigen::VectorXd::Constant(n - 1, -1.0 / (h * h))};
  for (Eigen::Index j = 0; j < n; ++j) t.diag[j] = 2.0 / (h * h) + potential(z[j]);
  return t;
}

FdSolution finish(const Tridiagonal& t, const Eigen::VectorXd& grid, int count, bool with_vectors) {
  FdSolution out;
  out.eigenvalues = lowest_eigenvalues(t, count);
  const auto ql = lowest_eigenvalues_ql(t, count);
  for (std::size_t i = 0; i < ql.size(); ++i) {
    out.ql_discrepancy = std::max(out.ql_discrepancy, std::abs(ql[i] - out.eigenvalues[i]));
  }
  out.grid = grid;
  if (with_vectors) {
    for (double lam : out.eigenvalues) out.vectors.push_back(eigenvector(t, lam));
  }
  return out;
}

// Half line d ∈ (0, L] measured from an inverse-square pole V ≈ ω/d², factored as ζ = d^p u.
// The outer end is either a symmetry point (Neumann for even, Dirichlet for odd) or a
// Dirichlet wall. `z_of_d` maps back to z, `d_of_z` recomputes the pole distance exactly as
// the potential sees it so the subtraction ω/d² cancels cleanly.
struct HalfLine {
  double length;
  double omega;
  bool outer_neumann;
};

template <class ZofD, class DofZ, class Pot>
FdSolution frobenius_half_line(const HalfLine& hl, int n, int count, bool with_vectors, ZofD&& z_of_d, DofZ&& d_of_z,
                               Pot&& potential) {
  const double p = 0.5 + std::sqrt(0.25 + hl.omega);
  const double L = hl.length;
  const double h = L / n;
  Eigen::VectorXd d(n), w(n), zg(n);
  Tridiagonal t{Eigen::VectorXd(n), Eigen::VectorXd(n - 1)};
  for (int j = 0; j < n; ++j) {
    d[j] = (j + 0.5) * h;
    w[j] = std::pow(d[j], 2.0 * p);
    zg[j] = z_of_d(d[j]);
  }
  const auto flux = [&](int face) { return std::pow(face * h, 2.0 * p); };
  for (int j = 0; j < n; ++j) {
    const double dz = d_of_z(zg[j]);
    const double v_rem = potential(zg[j]) - (hl.omega == 0.0 ? 0.0 : hl.omega / (dz * dz));
    double a = (flux(j) + flux(j + 1)) / (h * h) + w[j] * v_rem;
    if (j + 1 < n) t.off[j] = -flux(j + 1) / (h * h) / std::sqrt(w[j] * w[j + 1]);
    if (j + 1 == n) {
      const double lp = std::pow(L, 2.0 * p);
      a -= flux(n) / (h * h);
      a += hl.outer_neumann ? lp * (p / L) / (h * (1.0 + h * p / (2.0 * L))) : 2.0 * lp / (h * h);
    }
    t.diag[j] = a / w[j];
  }
  auto out = finish(t, zg, count, with_vectors);
  for (auto& v : out.vectors) {
    for (int j = 0; j < n; ++j) v[j] *= std::pow(d[j], p) / std::sqrt(w[j]);
    v.normalize();
  }
  return out;
}

// Half line z ∈ [0, L) with a Dirichlet wall at L: cell-centred so that z = 0 sits midway
// between the first node and its mirror image.
template <class Pot>
FdSolution symmetric_half(double L, int n, int count, bool even, bool with_vectors, Pot&& potential) {
  const double h = L / (n + 0.5);
  Eigen::VectorXd z(n);
  for (int j = 0; j < n; ++j) z[j] = (j + 0.5) * h;
  auto t = laplacian_plus(z, h, potential);
  t.diag[0] += (even ? -1.0 : 1.0) / (h * h);
  return finish(t, z, count, with_vectors);
}

FdSolution merge_sectors(const FdSolution& even, const FdSolution& odd, int count) {
  FdSolution out;
  out.eigenvalues = even.eigenvalues;
  out.eigenvalues.insert(out.eigenvalues.end(), odd.eigenvalues.begin(), odd.eigenvalues.end());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.eigenvalues.resize(static_cast<std::size_t>(count));
  out.ql_discrepancy = std::max(even.ql_discrepancy, odd.ql_discrepancy);
  return out;
}

double recip_quadratic_extent(const OrderingParams& o, const GridSpec& g) {
  const double w = std::abs(to_double(omega_of(ProfileKind::ReciprocalQuadratic, o)));
  double z = 12.0;
  if (w > 0.0) z = std::max(z, std::acosh(std::sqrt(w / g.truncation_tol)));
  return z;
}

}  // namespace

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int count) {
  const int n = static_cast<int>(t.diag.size());
  if (count < 0 || count > n) fail(ErrorKind::DomainError, "requested more eigenvalues than grid points");
  const auto [g_lo, g_hi] = gershgorin(t);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double lo = g_lo;
  for (int k = 0; k < count; ++k) {
    double a = lo, b = g_hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b || b - a <= 2.0 * kEps * std::max(std::abs(a), std::abs(b))) break;
      if (sturm_count(t, mid) > k) b = mid; else a = mid;
    }
    out.push_back(0.5 * (a + b));
    lo = a;
  }
  return out;
}

Eigen::VectorXd eigenvector(const Tridiagonal& t, double lambda) {
  const Eigen::Index n = t.diag.size();
  const double scale = std::max(std::abs(lambda), t.diag.cwiseAbs().maxCoeff());
  const double shift = lambda + 64.0 * kEps * scale;
  const double tiny = kEps * scale;
  // Thomas elimination of (T − σ) once, then repeated solves.
  Eigen::VectorXd piv(n), mult(n);
  piv[0] = t.diag[0] - shift;
  if (std::abs(piv[0]) < tiny) piv[0] = tiny;
  for (Eigen::Index i = 1; i < n; ++i) {
    mult[i] = t.off[i - 1] / piv[i - 1];
    piv[i] = t.diag[i] - shift - mult[i] * t.off[i - 1];
    if (std::abs(piv[i]) < tiny) piv[i] = tiny;
  }
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] += 1e-3 * std::sin(0.37 * static_cast<double>(i));
  for (int it = 0; it < 4; ++it) {
    for (Eigen::Index i = 1; i < n; ++i) x[i] -= mult[i] * x[i - 1];
    x[n - 1] /= piv[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) x[i] = (x[i] - t.off[i] * x[i + 1]) / piv[i];
    x.normalize();
  }
  // Fix the overall sign: first significant component positive.
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(x[i]) > 1e-8) {
      if (x[i] < 0.0) x = -x;
      break;
    }
  }
  return x;
}

std::vector<double> lowest_eigenvalues_ql(const Tridiagonal& t, int count) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(t.diag, t.off, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  return std::vector<double>(ev.data(), ev.data() + std::min<Eigen::Index>(count, ev.size()));
}

FdSolution fd_solve_z(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid, int count,
                      Sector sector, bool with_vectors) {
  check_grid(grid);
  const int n = grid.n_points;
  const double w = to_double(omega_of(profile.kind(), ordering));
  const auto V = [&](double z) { return effective_potential(profile, ordering, z); };

  switch (profile.kind()) {
    case ProfileKind::SolitonLike:
    case ProfileKind::ReciprocalBiquadratic:
    case ProfileKind::ReciprocalQuadratic: {
      double edge = 0.0;
      if (profile.is(ProfileKind::ReciprocalQuadratic)) {
        edge = recip_quadratic_extent(ordering, grid);
      } else {
        edge = std::numbers::pi / 2.0 - (w == 0.0 ? 0.0 : grid.wall_delta);
      }
      const double lo = grid.lo.value_or(-edge);
      const double hi = grid.hi.value_or(edge);
      if (sector == Sector::Full) {
        const auto g = plain_grid(lo, hi, n);
        return finish(laplacian_plus(g.z, g.h, V), g.z, count, with_vectors);
      }
      return symmetric_half(hi, n, count, sector == Sector::Even, with_vectors, V);
    }

    case ProfileKind::Exponential: {
      const auto solve = [&](bool even) {
        if (w >= -0.25) {
          return frobenius_half_line({1.0, w, even}, n, count, with_vectors, [](double d) { return 1.0 - d; },
                                     [](double z) { return 1.0 - std::abs(z); }, V);
        }
        return symmetric_half(1.0 - grid.wall_delta, n, count, even, with_vectors, V);
      };
      if (sector == Sector::Even) return solve(true);
      if (sector == Sector::Odd) return solve(false);
      return merge_sectors(solve(true), solve(false), count);
    }

    case ProfileKind::Parabolic: {
      const double L = profile.ell() * profile.ell();
      if (w >= -0.25) {
        return frobenius_half_line({L, w, false}, n, count, with_vectors, [](double d) { return d; },
                                   [](double z) { return std::abs(z); }, V);
      }
      const auto g = plain_grid(grid.wall_delta, L, n);
      return finish(laplacian_plus(g.z, g.h, V), g.z, count, with_vectors);
    }
  }
  return {};
}

std::vector<double> fd_spectrum_z(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid,
                                  int count, Sector sector) {
  return fd_solve_z(profile, ordering, grid, count, sector, false).eigenvalues;
}

FdSolution fd_solve_x(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid, int count,
                      const XSpaceOptions& options, bool with_vectors) {
  check_grid(grid);
  if (profile.is(ProfileKind::Exponential)) {
    fail(ErrorKind::SingularInterior, "exponential mass has a kink at x = 0; use the z-space solver");
  }
  if (profile.is(ProfileKind::Parabolic)) {
    fail(ErrorKind::SingularInterior, "parabolic mass vanishes at x = 0; use the z-space solver");
  }
  const double half = profile.is(ProfileKind::SolitonLike) ? 20.0 : 100.0;
  const auto g = plain_grid(grid.lo.value_or(-half), grid.hi.value_or(half), grid.n_points);
  const Eigen::Index n = g.z.size();
  const double h = g.h;
  const auto U = [&](double x) { return options.include_ambiguity ? ambiguity_potential(profile, ordering, x) : 0.0; };

  Tridiagonal t{Eigen::VectorXd(n), Eigen::VectorXd(n - 1)};
  Eigen::VectorXd similarity = Eigen::VectorXd::Ones(n);
  if (!options.unsymmetrized) {
    const auto k = [&](double x) { return 1.0 / mass(profile, x); };
    for (Eigen::Index j = 0; j < n; ++j) {
      const double km = k(g.z[j] - 0.5 * h), kp = k(g.z[j] + 0.5 * h);
      t.diag[j] = (km + kp) / (h * h) + U(g.z[j]);
      if (j + 1 < n) t.off[j] = -kp / (h * h);
    }
  } else {
    // Row j: −ψ″/m + (m′/m²)ψ′ with central differences.
    Eigen::VectorXd upper(n), lower(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto mj = mass_jet(profile, g.z[j]);
      const double c2 = 1.0 / (mj.m * h * h);
      const double c1 = mj.dm / (mj.m * mj.m * 2.0 * h);
      t.diag[j] = 2.0 * c2 + U(g.z[j]);
      upper[j] = -c2 + c1;  // coefficient of ψ_{j+1}
      lower[j] = -c2 - c1;  // coefficient of ψ_{j−1}
    }
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
      const double prod = upper[j] * lower[j + 1];
      if (!(prod > 0.0)) fail(ErrorKind::DomainError, "grid too coarse to symmetrize the x-space operator");
      t.off[j] = -std::sqrt(prod);
      similarity[j + 1] = similarity[j] * std::sqrt(upper[j] / lower[j + 1]);
    }
  }
  auto out = finish(t, g.z, count, with_vectors);
  for (auto& v : out.vectors) {
    v = v.cwiseQuotient(similarity);
    v.normalize();
  }
  return out;
}

std::vector<double> fd_spectrum_x(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid,
                                  int count, const XSpaceOptions& options) {
  return fd_solve_x(profile, ordering, grid, count, options, false).eigenvalues;
}

OracleReport compare(const LevelSet& analytic, const std::vector<double>& numeric, double rel_tol) {
  if (analytic.levels.empty() || numeric.empty() || analytic.levels.size() != numeric.size()) {
    fail(ErrorKind::LengthMismatch, "cannot pair " + std::to_string(analytic.levels.size()) + " analytic with " +
                                        std::to_string(numeric.size()) + " numeric levels");
  }
  std::vector<double> a;
  for (const auto& l : analytic.levels) a.push_back(l.e_tilde);
  std::vector<double> b = numeric;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  OracleReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double abs_err = std::abs(a[i] - b[i]);
    const double rel_err = abs_err / std::max(std::abs(a[i]), 1.0);
    rep.levels.emplace_back(static_cast<int>(i), b[i]);
    rep.compared.push_back({a[i], b[i], abs_err, rel_err});
    if (!(rel_err <= rel_tol)) rep.pass = false;
  }
  return rep;
}

}  // namespace pdm
