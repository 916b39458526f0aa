#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "pdm/params.hpp"
#include "pdm/spectra.hpp"

namespace pdm {

/// Uniform finite-difference grid. The domain defaults per profile: the full z-interval
/// with walls `wall_delta` inside any pole, or |z| <= Z for the reciprocal quadratic profile,
/// with Z chosen so that the sech² tail is below `truncation_tol`.
struct GridSpec {
  int n_points = 4000;
  std::optional<double> lo;
  std::optional<double> hi;
  double truncation_tol = 1e-8;
  double wall_delta = 1e-4;
};

enum class Sector { Full, Even, Odd };

/// Symmetric tridiagonal matrix: diag(0..n-1), off(0..n-2).
struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;
};

/// Lowest `count` eigenvalues by Sturm-sequence bisection, ascending.
std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int count);
/// Unit eigenvector for an (accurate) eigenvalue, by inverse iteration.
Eigen::VectorXd eigenvector(const Tridiagonal& t, double lambda);
/// Same eigenvalues through Eigen's implicit QL, as an independent check.
std::vector<double> lowest_eigenvalues_ql(const Tridiagonal& t, int count);

struct FdSolution {
  std::vector<double> eigenvalues;
  /// Sample abscissae and ζ (or ψ in x-space) eigenvectors on them; empty when the solve
  /// merged two half-domain sectors.
  Eigen::VectorXd grid;
  std::vector<Eigen::VectorXd> vectors;
  /// Largest |bisection − QL| over the returned eigenvalues.
  double ql_discrepancy = 0.0;
};

/// Finite-difference eigenproblem −ζ″ + V(z)ζ = Ẽζ.
///
/// Trigonometric and reciprocal quadratic profiles use a plain second-order stencil with
/// Dirichlet walls. The exponential and parabolic profiles are reduced to a half line
/// [pole, symmetry point]. When ω >= −1/4 the inverse-square pole is factored out as
/// ζ = d^p u with p(p−1) = ω, leaving a weighted Sturm–Liouville problem that needs no wall;
/// otherwise a Dirichlet wall sits `wall_delta` inside the pole. The parabolic profile
/// ignores `sector` (its two sectors are degenerate).
FdSolution fd_solve_z(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid, int count,
                      Sector sector = Sector::Full, bool with_vectors = false);

std::vector<double> fd_spectrum_z(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid,
                                  int count, Sector sector = Sector::Full);

struct XSpaceOptions {
  /// Discretize −ψ″/m + (m′/m²)ψ′ directly with central differences and symmetrize the
  /// resulting matrix by a diagonal similarity, instead of the conservative stencil.
  bool unsymmetrized = false;
  bool include_ambiguity = true;
};

/// Finite-difference eigenproblem −(ψ′/m)′ + Ũψ = Ẽψ on a truncated x-interval.
/// Default half-widths: 20 (soliton-like), 100 (the two reciprocal profiles).
/// Throws SingularInterior for the exponential (mass kink) and parabolic (m(0) = 0) profiles.
FdSolution fd_solve_x(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid, int count,
                      const XSpaceOptions& options = {}, bool with_vectors = false);

std::vector<double> fd_spectrum_x(const ProfileId& profile, const OrderingParams& ordering, const GridSpec& grid,
                                  int count, const XSpaceOptions& options = {});

struct ComparedLevel {
  double analytic;
  double numeric;
  double abs_error;
  double rel_error;  // |Δ| / max(|analytic|, 1): absolute near zero, relative otherwise
};

struct OracleReport {
  std::vector<std::pair<int, double>> levels;
  std::vector<ComparedLevel> compared;
  bool pass = false;
};

/// Pairs levels by index after sorting both lists. Throws LengthMismatch when the lists
/// differ in length or are empty.
OracleReport compare(const LevelSet& analytic, const std::vector<double>& numeric, double rel_tol);

}  // namespace pdm
