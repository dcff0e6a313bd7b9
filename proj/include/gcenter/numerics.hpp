#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

namespace gcenter {

// Symmetric tridiagonal matrix, the carrier for the discretized rotor
// Hamiltonian.  Entries in meV.
struct SymTridiag {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // length diagonal.size() - 1

  std::size_t size() const { return diagonal.size(); }
};

// Module tolerances.  delta spans ~1e-9 of the matrix scale, so they are
// explicit and overridable instead of buried in call sites.
struct NumericsConfig {
  double root_rel_tol = 1e-12;     // find_root: bracket width / initial width
  double newton_tol = 1e-11;       // newton2: residual inf-norm
  int newton_max_iter = 200;
  double fd_step_rel = 1e-6;       // newton2: finite-difference Jacobian step
};

// Lowest `count` eigenvalues, ascending.  Bisection on the Sturm sequence
// with long double accumulation; absolute accuracy is a few ulps of the
// matrix norm, well below 1e-12 relative.  Deterministic.
std::vector<double> eig_tridiag(const SymTridiag& m, int count);

struct EigSym3 {
  Eigen::Vector3d eigenvalues;   // sorted by descending |value|
  Eigen::Matrix3d eigenvectors;  // columns, orthonormal, right-handed
};

// Eigendecomposition of a symmetric 3x3 matrix.
EigSym3 eig_sym3(const Eigen::Matrix3d& t);

// Root of f in [lo, hi]; requires a sign change.  Brent's method.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const NumericsConfig& cfg = {});

// Damped Newton for a 2-D system with finite-difference Jacobian.
// Throws fit_error (with the best iterate) on divergence.
Eigen::Vector2d newton2(
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& f,
    Eigen::Vector2d start, const NumericsConfig& cfg = {});

}  // namespace gcenter
