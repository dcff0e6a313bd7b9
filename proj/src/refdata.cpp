#include "gcenter/refdata.hpp"

namespace gcenter::refdata {

rotor::RotorPotential singlet_excited_potential() { return {22.5, 33.0, 6}; }

rotor::RotorPotential triplet_potential() { return {25.7, 40.0, 6}; }

rotor::RotorPotential electronic_ground_potential() { return {31.97, 89.0, 6}; }

Eigen::Vector3d odmr_field_direction() {
  return Eigen::Vector3d(0.0, 1.0, 1.0).normalized();
}

// Principal frames: (xx, yy, zz) as reported.
tensor::SymTensor3 zfs_calculated() {
  return tensor::SymTensor3::from_diagonal(307.0, 911.0, -1218.0);
}

tensor::SymTensor3 zfs_experimental_abs() {
  return tensor::SymTensor3::from_diagonal(142.0, 800.0, 941.0);
}

tensor::SymTensor3 hyperfine_calculated() {
  return tensor::SymTensor3::from_diagonal(-267.0, -324.0, -347.0);
}

tensor::SymTensor3 hyperfine_experimental() {
  return tensor::SymTensor3::from_diagonal(273.0, 312.0, 339.0);
}

}  // namespace gcenter::refdata
