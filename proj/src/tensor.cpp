#include "gcenter/tensor.hpp"

#include <cmath>
#include <numbers>

#include "gcenter/errors.hpp"
#include "gcenter/numerics.hpp"

namespace gcenter::tensor {

SymTensor3 SymTensor3::from_matrix(const Eigen::Matrix3d& m) {
  return {m(0, 0), m(1, 1), m(2, 2), 0.5 * (m(0, 1) + m(1, 0)),
          0.5 * (m(0, 2) + m(2, 0)), 0.5 * (m(1, 2) + m(2, 1))};
}

Eigen::Matrix3d SymTensor3::matrix() const {
  Eigen::Matrix3d m;
  m << xx, xy, xz, xy, yy, yz, xz, yz, zz;
  return m;
}

double SymTensor3::frobenius_norm() const { return matrix().norm(); }

AxisFrame AxisFrame::about(const Eigen::Vector3d& direction, int order) {
  const double norm = direction.norm();
  if (!(norm > 0.0) || !direction.allFinite())
    throw usage_error("tensor: averaging axis must be a nonzero vector");
  AxisFrame f{direction / norm, order};
  f.validate();
  return f;
}

void AxisFrame::validate() const {
  if (!axis.allFinite() || std::fabs(axis.norm() - 1.0) > 1e-12)
    throw usage_error("tensor: averaging axis must be unit length");
  if (rotation_order < 1)
    throw usage_error("tensor: rotation order must be >= 1");
}

SymTensor3 average_over_rotations(const SymTensor3& t, const AxisFrame& frame) {
  frame.validate();
  const Eigen::Matrix3d m = t.matrix();
  Eigen::Matrix3d sum = Eigen::Matrix3d::Zero();
  for (int i = 0; i < frame.rotation_order; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / frame.rotation_order;
    const Eigen::Matrix3d r =
        Eigen::AngleAxisd(angle, frame.axis).toRotationMatrix();
    sum += r * m * r.transpose();
  }
  SymTensor3 avg = SymTensor3::from_matrix(sum / frame.rotation_order);
  // The rotation sum preserves the trace analytically; pin it exactly.
  const double drift = (avg.trace() - t.trace()) / 3.0;
  avg.xx -= drift;
  avg.yy -= drift;
  avg.zz -= drift;
  return avg;
}

AxialParameters axial_parameters(const SymTensor3& t, const Eigen::Vector3d& n,
                                 double traceless_tol) {
  if (!(std::fabs(n.norm() - 1.0) <= 1e-9))
    throw usage_error("tensor: axial_parameters needs a unit axis");
  const double norm = t.frobenius_norm();
  if (std::fabs(t.trace()) > traceless_tol * std::max(norm, 1e-300))
    throw usage_error(
        "tensor: tensor is not traceless; call remove_isotropic first");

  const Eigen::Matrix3d m = t.matrix();
  const double d = 1.5 * n.dot(m * n);

  // Rhombicity from the 2x2 block transverse to n.
  Eigen::Vector3d u = n.unitOrthogonal();
  Eigen::Vector3d v = n.cross(u);
  const double tuu = u.dot(m * u);
  const double tvv = v.dot(m * v);
  const double tuv = u.dot(m * v);
  const double e =
      std::sqrt(0.25 * (tuu - tvv) * (tuu - tvv) + tuv * tuv);
  return {d, e};
}

IsotropicSplit remove_isotropic(const SymTensor3& t) {
  const double iso = t.trace() / 3.0;
  SymTensor3 out = t;
  out.xx -= iso;
  out.yy -= iso;
  out.zz -= iso;
  // second sweep flushes the rounding residue of the first subtraction
  const double rem = out.trace() / 3.0;
  out.xx -= rem;
  out.yy -= rem;
  out.zz -= rem;
  return {iso, out};
}

Eigen::Vector3d middle_eigenvector(const SymTensor3& t) {
  const EigSym3 eig = eig_sym3(t.matrix());
  return eig.eigenvectors.col(1);  // |values| sorted descending
}

}  // namespace gcenter::tensor
