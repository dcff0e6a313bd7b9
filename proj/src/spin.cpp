#include "gcenter/spin.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "gcenter/errors.hpp"
#include "gcenter/numerics.hpp"

namespace gcenter::spin {

namespace {

using Eigen::Matrix3cd;
using Eigen::Matrix3d;
using Eigen::Vector3d;

constexpr double kTracelessTol = 1e-6;

Matrix3d rotated(const Matrix3d& frame, const tensor::SymTensor3& t) {
  return frame * t.matrix() * frame.transpose();
}

std::array<double, 3> sorted_eigenvalues(const Matrix3cd& h) {
  Eigen::SelfAdjointEigenSolver<Matrix3cd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw compute_error("spin: eigensolver failed");
  return {es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
}

double gap(const std::array<double, 3>& e, int lower, int upper) {
  return e[upper] - e[lower];
}

}  // namespace

void TripletSpinSystem::validate() const {
  const double norm = d_mhz.frobenius_norm();
  if (norm > 0.0 && std::fabs(d_mhz.trace()) > kTracelessTol * norm)
    throw usage_error("spin: ZFS tensor must be traceless");
  if (!(g > 0.0)) throw usage_error("spin: g must be positive");
  if ((frame * frame.transpose() - Matrix3d::Identity()).norm() > 1e-9)
    throw usage_error("spin: frame must be orthonormal");
}

const std::array<Matrix3cd, 3>& spin1_operators() {
  static const std::array<Matrix3cd, 3> ops = [] {
    const std::complex<double> i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    std::array<Matrix3cd, 3> o;
    o[0] << 0, s, 0, s, 0, s, 0, s, 0;           // Sx
    o[1] << 0, -i * s, 0, i * s, 0, -i * s, 0, i * s, 0;  // Sy
    o[2] << 1, 0, 0, 0, 0, 0, 0, 0, -1;          // Sz
    return o;
  }();
  return ops;
}

Matrix3cd hamiltonian(const TripletSpinSystem& sys, const Vector3d& b_tesla) {
  sys.validate();
  if (!b_tesla.allFinite()) throw usage_error("spin: non-finite field");

  const auto& s = spin1_operators();
  const Matrix3d d = rotated(sys.frame, sys.d_mhz);

  Matrix3cd h = Matrix3cd::Zero();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) h += d(a, b) * s[a] * s[b];

  const double gamma_mhz_per_t = sys.g * constants.bohr_magneton_over_h * 1e3;
  for (int a = 0; a < 3; ++a) h += gamma_mhz_per_t * b_tesla(a) * s[a];
  return h;
}

std::array<double, 3> levels(const TripletSpinSystem& sys,
                             const Vector3d& b_tesla) {
  return sorted_eigenvalues(hamiltonian(sys, b_tesla));
}

std::array<double, 6> levels_hyperfine_first_order(const TripletSpinSystem& sys,
                                                   const Vector3d& b_tesla) {
  if (!sys.a_mhz)
    throw usage_error("spin: system has no hyperfine tensor");

  const Matrix3cd h = hamiltonian(sys, b_tesla);
  Eigen::SelfAdjointEigenSolver<Matrix3cd> es(h);
  if (es.info() != Eigen::Success)
    throw compute_error("spin: eigensolver failed");

  const auto& s = spin1_operators();
  const Matrix3d a = rotated(sys.frame, *sys.a_mhz);

  std::array<double, 6> out;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3cd v = es.eigenvectors().col(i);
    Vector3d spin_expect;
    for (int ax = 0; ax < 3; ++ax)
      spin_expect(ax) = std::real((v.adjoint() * s[ax] * v)(0));
    // nuclear I=1/2 sees the effective field A^T <S>
    const double split = (a.transpose() * spin_expect).norm();
    out[2 * i] = es.eigenvalues()(i) - 0.5 * split;
    out[2 * i + 1] = es.eigenvalues()(i) + 0.5 * split;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Resonance> resonance_fields(const TripletSpinSystem& sys,
                                        const Vector3d& direction,
                                        double probe_ghz, double b_max_tesla,
                                        const ResonanceSearch& opts) {
  if (!(probe_ghz > 0.0)) throw usage_error("spin: probe must be positive");
  if (!(b_max_tesla > 0.0)) throw usage_error("spin: field range empty");
  const double dnorm = direction.norm();
  if (!(dnorm > 0.0)) throw usage_error("spin: zero field direction");
  const Vector3d n = direction / dnorm;
  const double target_mhz = probe_ghz * 1e3;

  std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 2}};
  if (opts.include_double_quantum) pairs.push_back({0, 2});

  std::vector<Resonance> found;
  const int steps = std::max(opts.prescan_points, 16);
  const double db = b_max_tesla / steps;

  for (const auto& [lo_idx, up_idx] : pairs) {
    auto f = [&](double b) {
      return gap(levels(sys, b * n), lo_idx, up_idx) - target_mhz;
    };
    double prev_b = 0.0;
    double prev_f = f(0.0);
    for (int i = 1; i <= steps; ++i) {
      const double b = i * db;
      const double fb = f(b);
      // prev_f == 0 was already caught by the previous interval (or is the
      // excluded B = 0 endpoint)
      if (prev_f != 0.0 && prev_f * fb <= 0.0) {
        NumericsConfig cfg;
        cfg.root_rel_tol = opts.field_tol_tesla / db;
        const double root = find_root(f, prev_b, b, cfg);
        if (root > 0.0) found.push_back({root, lo_idx, up_idx});
      }
      prev_b = b;
      prev_f = fb;
    }
  }

  std::sort(found.begin(), found.end(), [](const Resonance& a,
                                           const Resonance& b) {
    if (a.b_tesla != b.b_tesla) return a.b_tesla < b.b_tesla;
    return std::make_pair(a.lower, a.upper) < std::make_pair(b.lower, b.upper);
  });
  return found;
}

std::vector<TripletSpinSystem> cubic_orientations(
    const TripletSpinSystem& sys) {
  sys.validate();

  // All 24 proper signed permutations, in a canonical deterministic order.
  std::vector<Matrix3d> group;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& perm : perms) {
    for (int signs = 0; signs < 8; ++signs) {
      Matrix3d r = Matrix3d::Zero();
      for (int row = 0; row < 3; ++row)
        r(row, perm[row]) = (signs >> row) & 1 ? -1.0 : 1.0;
      if (r.determinant() > 0.5) group.push_back(r);
    }
  }

  std::vector<TripletSpinSystem> out;
  const double tol = 1e-9 * std::max(sys.d_mhz.frobenius_norm(), 1.0);
  for (const Matrix3d& r : group) {
    TripletSpinSystem image = sys;
    image.frame = r * sys.frame;
    const Matrix3d d_img = rotated(image.frame, image.d_mhz);
    const bool duplicate =
        std::any_of(out.begin(), out.end(), [&](const TripletSpinSystem& seen) {
          if ((rotated(seen.frame, seen.d_mhz) - d_img).norm() > tol)
            return false;
          if (sys.a_mhz) {
            const Matrix3d a_img = rotated(image.frame, *image.a_mhz);
            if ((rotated(seen.frame, *seen.a_mhz) - a_img).norm() > tol)
              return false;
          }
          return true;
        });
    if (!duplicate) out.push_back(image);
  }
  return out;
}

std::vector<Branch> orientation_branches(
    const std::vector<TripletSpinSystem>& orientations,
    const Vector3d& direction, double probe_ghz, double b_max_tesla,
    const ResonanceSearch& opts, double merge_tol_tesla) {
  if (orientations.empty())
    throw usage_error("spin: orientation list must be non-empty");

  std::vector<Branch> branches;
  for (std::size_t id = 0; id < orientations.size(); ++id) {
    for (const Resonance& r : resonance_fields(orientations[id], direction,
                                               probe_ghz, b_max_tesla, opts)) {
      auto match = std::find_if(branches.begin(), branches.end(),
                                [&](const Branch& b) {
                                  return b.lower == r.lower &&
                                         b.upper == r.upper &&
                                         std::fabs(b.b_tesla - r.b_tesla) <=
                                             merge_tol_tesla;
                                });
      if (match == branches.end()) {
        branches.push_back(
            {r.b_tesla, r.lower, r.upper, 1, static_cast<int>(id)});
      } else {
        ++match->multiplicity;
      }
    }
  }
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) {
              if (a.b_tesla != b.b_tesla) return a.b_tesla < b.b_tesla;
              return std::make_pair(a.lower, a.upper) <
                     std::make_pair(b.lower, b.upper);
            });
  return branches;
}

TripletSpinSystem motional_average(const TripletSpinSystem& sys,
                                   const tensor::AxisFrame& frame) {
  sys.validate();
  TripletSpinSystem out = sys;
  out.d_mhz = tensor::average_over_rotations(sys.d_mhz, frame);
  if (sys.a_mhz)
    out.a_mhz = tensor::average_over_rotations(*sys.a_mhz, frame);
  return out;
}

}  // namespace gcenter::spin
