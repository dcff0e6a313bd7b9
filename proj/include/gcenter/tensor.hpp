#pragma once

#include <Eigen/Dense>

namespace gcenter::tensor {

// Symmetric 3x3 interaction tensor in MHz (zero-field splitting D or
// hyperfine A).
struct SymTensor3 {
  double xx = 0, yy = 0, zz = 0;
  double xy = 0, xz = 0, yz = 0;

  static SymTensor3 from_diagonal(double xx, double yy, double zz) {
    return {xx, yy, zz, 0.0, 0.0, 0.0};
  }
  static SymTensor3 from_matrix(const Eigen::Matrix3d& m);

  Eigen::Matrix3d matrix() const;
  double trace() const { return xx + yy + zz; }
  double frobenius_norm() const;
};

// Rotation axis for motional averaging (the <111>-type reorientation
// axis), together with the rotation order.
struct AxisFrame {
  Eigen::Vector3d axis;   // unit
  int rotation_order = 3;

  static AxisFrame about(const Eigen::Vector3d& direction, int order = 3);
  void validate() const;
};

// (1/n) sum_i R_i T R_i^T over the n rotations about the axis.  For
// order >= 3 the result is axially symmetric about the axis; the trace is
// preserved exactly.
SymTensor3 average_over_rotations(const SymTensor3& t, const AxisFrame& frame);

struct AxialParameters {
  double d_mhz;  // (3/2) n.T.n for traceless T
  double e_mhz;  // transverse rhombicity, 0 for an averaged tensor
};

// Requires |trace| <= traceless_tol * norm; remove the isotropic part first.
AxialParameters axial_parameters(const SymTensor3& t, const Eigen::Vector3d& n,
                                 double traceless_tol = 1e-6);

struct IsotropicSplit {
  double iso_mhz;
  SymTensor3 traceless;
};

IsotropicSplit remove_isotropic(const SymTensor3& t);

// Eigenvector of the middle-magnitude principal value: the default
// averaging axis when only principal values are known.
Eigen::Vector3d middle_eigenvector(const SymTensor3& t);

}  // namespace gcenter::tensor
