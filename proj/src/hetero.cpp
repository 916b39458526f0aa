#include "pdm/hetero.hpp"

#include <cmath>
#include <string>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm::hetero {

namespace {

using specfun::BesselKind;
constexpr cd kI(0.0, 1.0);

void check_energy(double e) {
  if (e == 0.0) fail(ErrorKind::ZeroEnergy, "E = 0 has power-law inner solutions; use inner_solutions_zero_energy");
  if (!std::isfinite(e)) fail(ErrorKind::DomainError, "energy must be finite");
}

void check_inside(const HeteroConfig& cfg, double x) {
  if (!(std::abs(x) <= cfg.ell * (1.0 + 1e-14))) {
    fail(ErrorKind::DomainError, "inner solutions live on |x| <= ell");
  }
}

// |u|^{3/2} C(s u²) and its x-derivative, given C and C′ at s u².
InnerValue lift(double u, double s, cd c, cd dc) {
  const double au = std::abs(u);
  const double sg = u < 0.0 ? -1.0 : 1.0;
  return {std::pow(au, 1.5) * c, 1.5 * sg * std::sqrt(au) * c + std::pow(au, 1.5) * dc * (2.0 * s * u)};
}

}  // namespace

HeteroConfig build_config(double m1, double m2, double ell, const OrderingParams& ordering) {
  if (!(m1 > 0.0) || !(m2 > 0.0) || !(ell > 0.0) || !std::isfinite(m1) || !std::isfinite(m2) || !std::isfinite(ell)) {
    fail(ErrorKind::DomainError, "m1, m2 and ell must be finite and positive");
  }
  if (m1 == m2) fail(ErrorKind::DegenerateJunction, "m1 = m2: the parabolic junction degenerates (chi diverges)");
  const auto a = half_sqrt_one_plus_four(omega_of(ProfileKind::Parabolic, ordering));
  if (a.imag() != 0.0) {
    fail(ErrorKind::InvalidOrdering, "ordering " + ordering.name() +
                                         " gives an imaginary Bessel order in the junction (omega < -1/4)");
  }
  const double r1 = std::sqrt(m1), r2 = std::sqrt(m2);
  HeteroConfig cfg{m1, m2, ell, ordering, 0.0, 0.0, a.real()};
  cfg.chi = (r2 + r1) / (r2 - r1) * ell;
  cfg.eta = (r2 - r1) * (r2 - r1) / (16.0 * ell * ell);
  return cfg;
}

std::pair<InnerValue, InnerValue> inner_solutions(const HeteroConfig& cfg, double e, double x) {
  check_energy(e);
  check_inside(cfg, x);
  const double u = x + cfg.chi;
  const double s = std::sqrt(cfg.eta * std::abs(e));
  const double y = s * u * u;
  if (e > 0.0) {
    const auto jy = specfun::bessel_jy(cfg.alpha, y);
    const cd h(jy.j, jy.y), dh(jy.jp, jy.yp);
    return {lift(u, s, jy.j, jy.jp), lift(u, s, h, dh)};
  }
  const auto ik = specfun::bessel_ik(cfg.alpha, y);
  return {lift(u, s, ik.i, ik.ip), lift(u, s, ik.k, ik.kp)};
}

std::pair<InnerValue, InnerValue> inner_solutions_zero_energy(const HeteroConfig& cfg, double x) {
  check_inside(cfg, x);
  const double u = x + cfg.chi;
  const double au = std::abs(u);
  const double sg = u < 0.0 ? -1.0 : 1.0;
  const auto power = [&](double p) -> InnerValue { return {std::pow(au, p), sg * p * std::pow(au, p - 1.0)}; };
  return {power(1.5 + 2.0 * cfg.alpha), power(1.5 - 2.0 * cfg.alpha)};
}

BoundaryVectors boundary_vectors(const HeteroConfig& cfg, double e) {
  BoundaryVectors bv;
  const auto [p1, q1] = inner_solutions(cfg, e, -cfg.ell);
  const auto [p2, q2] = inner_solutions(cfg, e, cfg.ell);
  bv.theta_1 = {p1.psi, q1.psi};
  bv.theta_dot_1 = {p1.dpsi, q1.dpsi};
  bv.theta_2 = {p2.psi, q2.psi};
  bv.theta_dot_2 = {p2.dpsi, q2.dpsi};
  bv.k1 = std::sqrt(cd(cfg.m1 * e, 0.0));
  bv.k2 = std::sqrt(cd(cfg.m2 * e, 0.0));
  bv.kappa_1 = bv.theta_dot_1 + kI * bv.k1 * bv.theta_1;
  bv.kappa_2 = bv.theta_dot_2 - kI * bv.k2 * bv.theta_2;
  return bv;
}

double bound_state_determinant(const HeteroConfig& cfg, double e) {
  if (!(e < 0.0)) fail(ErrorKind::DomainError, "bound states need E < 0");
  const auto bv = boundary_vectors(cfg, e);
  const cd d = dot(bv.kappa_1, perp(bv.kappa_2));
  if (!(std::abs(d.imag()) <= 1e-12 * std::max(1.0, std::abs(d.real())))) {
    fail(ErrorKind::DomainError, "bound-state determinant acquired an imaginary part");
  }
  return d.real();
}

std::vector<BoundState> find_bound_states(const HeteroConfig& cfg, const BoundSearch& search) {
  if (!(search.e_lo < search.e_hi) || !(search.e_hi < 0.0) || search.scan_points < 2) {
    fail(ErrorKind::DomainError, "bound-state search range must lie in (-inf, 0) with at least two scan points");
  }
  std::vector<BoundState> out;
  const auto f = [&](double e) { return bound_state_determinant(cfg, e); };
  const double step = (search.e_hi - search.e_lo) / (search.scan_points - 1);
  double e_prev = search.e_lo;
  double f_prev = f(e_prev);
  for (int i = 1; i < search.scan_points && static_cast<int>(out.size()) < search.max_states; ++i) {
    const double e_cur = i + 1 == search.scan_points ? search.e_hi : search.e_lo + i * step;
    const double f_cur = f(e_cur);
    if (f_prev == 0.0 || f_prev * f_cur < 0.0) {
      double lo = e_prev, hi = e_cur, flo = f_prev;
      while (f_prev != 0.0 && hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; } else { hi = mid; }
      }
      const double root = f_prev == 0.0 ? e_prev : 0.5 * (lo + hi);
      const auto bv = boundary_vectors(cfg, root);
      const double q1 = std::abs(bv.k1);
      const double q2 = std::abs(bv.k2);
      const Eigen::Vector2cd c = -std::exp(-q1 * cfg.ell) / dot(bv.theta_dot_1, perp(bv.theta_1)) * perp(bv.kappa_1);
      const cd b = std::exp(q2 * cfg.ell) * dot(bv.theta_2, c);
      out.push_back({root, c[0], c[1], b});
    }
    e_prev = e_cur;
    f_prev = f_cur;
  }
  return out;
}

ScatteringResult scattering(const HeteroConfig& cfg, double e) {
  if (!(e > 0.0)) fail(ErrorKind::DomainError, "scattering needs E > 0");
  const auto bv = boundary_vectors(cfg, e);
  const Eigen::Vector2cd k2p = perp(bv.kappa_2);
  const cd d = dot(bv.kappa_1, k2p);
  if (std::abs(d) < 1e-13) fail(ErrorKind::ResonanceDenominator, "kappa_1^T kappa_2^perp vanishes at E = " + std::to_string(e));
  const cd k1 = bv.k1, k2 = bv.k2;
  const double l = cfg.ell;
  const Eigen::Vector2cd c = (2.0 * kI * k1 * std::exp(-kI * k1 * l) / d) * k2p;
  const cd r = -std::exp(-2.0 * kI * k1 * l) * dot(bv.theta_dot_1 - kI * k1 * bv.theta_1, k2p) / d;
  const cd t = -2.0 * kI * k1 * std::exp(-kI * k1 * l) * std::exp(-kI * k2 * l) *
               dot(bv.theta_dot_2, perp(bv.theta_2)) / d;
  const double flux = std::norm(r) / std::sqrt(cfg.m1) + std::norm(t) / std::sqrt(cfg.m2) - 1.0 / std::sqrt(cfg.m1);
  return {e, r, t, c[0], c[1], std::abs(flux)};
}

std::vector<SweepRow> rt_sweep(const HeteroConfig& cfg, const std::vector<double>& e_grid) {
  std::vector<SweepRow> rows;
  rows.reserve(e_grid.size());
  for (double e : e_grid) {
    if (!(e > 0.0) || !std::isfinite(e)) fail(ErrorKind::DomainError, "sweep energies must be positive and finite");
    SweepRow row{e};
    try {
      const auto s = scattering(cfg, e);
      row.r2 = std::norm(s.r);
      row.t2 = std::norm(s.t);
      row.flux_residual = s.flux_residual;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::ResonanceDenominator) throw;
      row.resonance = true;
    }
    rows.push_back(row);
  }
  return rows;
}

cd scattering_psi(const HeteroConfig& cfg, const ScatteringResult& s, double x) {
  const cd k1 = std::sqrt(cd(cfg.m1 * s.e_tilde, 0.0));
  const cd k2 = std::sqrt(cd(cfg.m2 * s.e_tilde, 0.0));
  if (x < -cfg.ell) return std::exp(kI * k1 * x) + s.r * std::exp(-kI * k1 * x);
  if (x > cfg.ell) return s.t * std::exp(kI * k2 * x);
  const auto [p, q] = inner_solutions(cfg, s.e_tilde, x);
  return s.c1 * p.psi + s.c2 * q.psi;
}

cd bound_psi(const HeteroConfig& cfg, const BoundState& b, double x) {
  const double q1 = std::sqrt(cfg.m1 * -b.e_tilde);
  const double q2 = std::sqrt(cfg.m2 * -b.e_tilde);
  if (x < -cfg.ell) return std::exp(q1 * x);
  if (x > cfg.ell) return b.b * std::exp(-q2 * x);
  const auto [p, q] = inner_solutions(cfg, b.e_tilde, x);
  return b.c1 * p.psi + b.c2 * q.psi;
}

}  // namespace pdm::hetero
