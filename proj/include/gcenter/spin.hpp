#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "gcenter/tensor.hpp"
#include "gcenter/units.hpp"

namespace gcenter::spin {

// S = 1 spin system: H = S.D.S + g (mu_B/h) B.S, all in MHz, with an
// optional I = 1/2 hyperfine coupling treated to first order.
struct TripletSpinSystem {
  tensor::SymTensor3 d_mhz;   // traceless ZFS tensor, defect frame
  double g = default_defect_g;
  std::optional<tensor::SymTensor3> a_mhz;  // hyperfine, defect frame
  Eigen::Matrix3d frame = Eigen::Matrix3d::Identity();  // defect -> crystal

  void validate() const;
};

// Spin-1 operator matrices in the |+1>, |0>, |-1> basis.
const std::array<Eigen::Matrix3cd, 3>& spin1_operators();

// Electron Hamiltonian in the crystal frame, MHz.  B in tesla.
Eigen::Matrix3cd hamiltonian(const TripletSpinSystem& sys,
                             const Eigen::Vector3d& b_tesla);

// Three eigenvalues, ascending, MHz.  Sum is zero (both terms traceless).
std::array<double, 3> levels(const TripletSpinSystem& sys,
                             const Eigen::Vector3d& b_tesla);

// Six levels with the I = 1/2 hyperfine added at first order: each
// electron level i splits by +-|A <S>_i| / 2.  Requires a_mhz.
std::array<double, 6> levels_hyperfine_first_order(
    const TripletSpinSystem& sys, const Eigen::Vector3d& b_tesla);

struct Resonance {
  double b_tesla;
  int lower;  // level indices of the ascending-sorted spectrum
  int upper;
};

struct ResonanceSearch {
  int prescan_points = 2000;  // uniform pre-scan; catches anticrossings
  bool include_double_quantum = false;  // also search the (0,2) gap
  double field_tol_tesla = 1e-9;
};

// All fields B in (0, b_max] along `direction` where an adjacent level
// gap matches the probe, refined until the gap residual is well below
// 1e-3 MHz.  Sorted by field, then by transition.
std::vector<Resonance> resonance_fields(const TripletSpinSystem& sys,
                                        const Eigen::Vector3d& direction,
                                        double probe_ghz, double b_max_tesla,
                                        const ResonanceSearch& opts = {});

// The 24 proper rotations of the cubic host applied to the defect frame,
// deduplicated by the resulting crystal-frame tensors.
std::vector<TripletSpinSystem> cubic_orientations(const TripletSpinSystem& sys);

struct Branch {
  double b_tesla;
  int lower;
  int upper;
  int multiplicity;      // orientations sharing this field
  int orientation_id;    // representative (lowest id)
};

// Per-orientation resonances merged when fields coincide within
// merge_tol_tesla for the same transition.
std::vector<Branch> orientation_branches(
    const std::vector<TripletSpinSystem>& orientations,
    const Eigen::Vector3d& direction, double probe_ghz, double b_max_tesla,
    const ResonanceSearch& opts = {}, double merge_tol_tesla = 1e-5);

// Replaces D (and A, if present) by their rotation averages; g unchanged.
TripletSpinSystem motional_average(const TripletSpinSystem& sys,
                                   const tensor::AxisFrame& frame);

}  // namespace gcenter::spin
