#include "gcenter/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gcenter/errors.hpp"

namespace gcenter {

namespace {

void check_finite(const SymTridiag& m) {
  if (m.size() < 1) throw usage_error("eig_tridiag: empty matrix");
  if (m.off_diagonal.size() + 1 != m.diagonal.size())
    throw usage_error("eig_tridiag: off_diagonal must have length n-1");
  for (double d : m.diagonal)
    if (!std::isfinite(d)) throw compute_error("eig_tridiag: non-finite diagonal");
  for (double e : m.off_diagonal)
    if (!std::isfinite(e)) throw compute_error("eig_tridiag: non-finite off-diagonal");
}

// Number of eigenvalues strictly below x, via the LDL^T pivot signs.
int sturm_count(const std::vector<long double>& diag,
                const std::vector<long double>& off2, long double x,
                long double pivmin) {
  int count = 0;
  long double d = diag[0] - x;
  if (std::fabs(d) < pivmin) d = -pivmin;
  if (d < 0.0L) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    d = diag[i] - x - off2[i - 1] / d;
    if (std::fabs(d) < pivmin) d = -pivmin;
    if (d < 0.0L) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> eig_tridiag(const SymTridiag& m, int count) {
  check_finite(m);
  const int n = static_cast<int>(m.size());
  if (count < 1 || count > n)
    throw usage_error("eig_tridiag: count must be in [1, n]");

  std::vector<long double> diag(m.diagonal.begin(), m.diagonal.end());
  std::vector<long double> off2(m.off_diagonal.size());
  long double bmax = 0.0L;
  for (std::size_t i = 0; i < off2.size(); ++i) {
    long double b = m.off_diagonal[i];
    off2[i] = b * b;
    bmax = std::max(bmax, off2[i]);
  }

  // Gershgorin bounds
  long double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    long double r = 0.0L;
    if (i > 0) r += std::fabs((long double)m.off_diagonal[i - 1]);
    if (i < n - 1) r += std::fabs((long double)m.off_diagonal[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const long double scale =
      std::max({std::fabs(lo), std::fabs(hi), (long double)1e-30});
  const long double pivmin = std::max(bmax, (long double)1.0L) * 1e-300L;
  lo -= scale * 1e-18L;
  hi += scale * 1e-18L;

  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<double> out(count);
  long double search_lo = lo;
  for (int k = 0; k < count; ++k) {
    long double a = search_lo, b = hi;
    // invariant: count(a) <= k < count(b)
    while (b - a > eps * scale * 4.0L) {
      long double mid = a + (b - a) * 0.5L;
      if (mid <= a || mid >= b) break;
      if (sturm_count(diag, off2, mid, pivmin) > k)
        b = mid;
      else
        a = mid;
    }
    out[k] = static_cast<double>(a + (b - a) * 0.5L);
    search_lo = a;  // eigenvalue k+1 cannot lie below eigenvalue k
  }
  return out;
}

EigSym3 eig_sym3(const Eigen::Matrix3d& t) {
  if (!t.allFinite()) throw compute_error("eig_sym3: non-finite input");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
  es.compute(t);  // iterative path: full precision, deterministic
  if (es.info() != Eigen::Success)
    throw compute_error("eig_sym3: eigensolver failed");

  std::array<int, 3> order = {0, 1, 2};
  const Eigen::Vector3d& ev = es.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::fabs(ev(a)) > std::fabs(ev(b));
  });

  EigSym3 out;
  for (int i = 0; i < 3; ++i) {
    out.eigenvalues(i) = ev(order[i]);
    out.eigenvectors.col(i) = es.eigenvectors().col(order[i]);
  }
  if (out.eigenvectors.determinant() < 0.0) out.eigenvectors.col(2) *= -1.0;
  return out;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const NumericsConfig& cfg) {
  if (!(lo < hi)) throw usage_error("find_root: need lo < hi");
  double fa = f(lo), fb = f(hi);
  if (!std::isfinite(fa) || !std::isfinite(fb))
    throw compute_error("find_root: non-finite endpoint value");
  if (fa == 0.0) return lo;
  if (fb == 0.0) return hi;
  if (fa * fb > 0.0) {
    std::ostringstream os;
    os << "find_root: no sign change on [" << lo << ", " << hi << "] (f(lo)="
       << fa << ", f(hi)=" << fb << ")";
    throw bracketing_error(os.str());
  }

  // Brent: inverse-quadratic / secant with bisection fallback.
  double a = lo, b = hi, c = lo, fc = fa;
  double d = b - a, e = d;
  const double width0 = hi - lo;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() *
                           std::fabs(b) +
                       0.5 * cfg.root_rel_tol * width0;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol || fb == 0.0) return b;

    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol) ? d : (xm > 0.0 ? tol : -tol);
    fb = f(b);
    if (!std::isfinite(fb)) throw compute_error("find_root: non-finite value");
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

Eigen::Vector2d newton2(
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& f,
    Eigen::Vector2d start, const NumericsConfig& cfg) {
  Eigen::Vector2d x = start;
  Eigen::Vector2d r = f(x);
  Eigen::Vector2d best_x = x;
  double best_norm = r.norm();

  for (int iter = 0; iter < cfg.newton_max_iter; ++iter) {
    if (r.cwiseAbs().maxCoeff() < cfg.newton_tol) return x;

    Eigen::Matrix2d jac;
    for (int j = 0; j < 2; ++j) {
      const double h = cfg.fd_step_rel * std::max(std::fabs(x(j)), 1e-3);
      Eigen::Vector2d xp = x, xm = x;
      xp(j) += h;
      xm(j) -= h;
      jac.col(j) = (f(xp) - f(xm)) / (2.0 * h);
    }
    if (!jac.allFinite() || std::fabs(jac.determinant()) < 1e-300) {
      throw fit_error("newton2: singular finite-difference Jacobian",
                      best_x(0), best_x(1), best_norm);
    }
    const Eigen::Vector2d step = jac.partialPivLu().solve(-r);

    // backtracking line search on the residual norm
    double lambda = 1.0;
    bool accepted = false;
    for (int cut = 0; cut < 40; ++cut) {
      Eigen::Vector2d xt = x + lambda * step;
      Eigen::Vector2d rt = f(xt);
      if (rt.allFinite() && rt.norm() < r.norm()) {
        x = xt;
        r = rt;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw fit_error("newton2: line search stalled", best_x(0), best_x(1),
                      best_norm);
    if (r.norm() < best_norm) {
      best_norm = r.norm();
      best_x = x;
    }
  }
  if (r.cwiseAbs().maxCoeff() < cfg.newton_tol) return x;
  throw fit_error("newton2: no convergence within iteration budget", best_x(0),
                  best_x(1), best_norm);
}

}  // namespace gcenter
