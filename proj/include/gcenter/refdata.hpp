#pragma once

#include "gcenter/rotor.hpp"
#include "gcenter/tensor.hpp"

namespace gcenter::refdata {

// Published G-center reference values used by the reproduction report and
// as defaults for the CLI.  Rotor parameters come from first-principles
// reorientation-path calculations; the tensors and line data from EPR,
// ODMR and photoluminescence measurements on the defect.

// Mass-weighted reorientation-path potentials (L in sqrt(u) A, V0 in meV).
rotor::RotorPotential singlet_excited_potential();   // fitted: 22.5, 33
rotor::RotorPotential triplet_potential();           // computed: 25.7, 40
rotor::RotorPotential electronic_ground_potential(); // computed: 31.97, 89

// Reported tunneling splittings (ueV).
inline constexpr double singlet_delta_uev = 2.5;   // PL fine structure
inline constexpr double triplet_delta_uev = 0.22;

// Reported athermal reorientation rate 6 delta / h in the triplet (GHz).
inline constexpr double triplet_gamma0_ghz = 0.321;

// PL line data.
inline constexpr double zpl_energy_ev = 0.97;
inline constexpr double activation_energy_mev = 12.4;  // line merging
inline constexpr double quartet_resolved_temperature_k = 1.4;
inline constexpr double quartet_merged_temperature_k = 20.0;

// Central-atom isotope shifts of the fine-structure lines (ueV).
inline constexpr double isotope_shift_29si_uev = 54.0;
inline constexpr double isotope_shift_30si_uev = 106.0;

// ODMR measurement context.
inline constexpr double odmr_probe_ghz = 35.0;
inline constexpr double regime_crossover_temperature_k = 5.0;
Eigen::Vector3d odmr_field_direction();  // [011]

// Zero-field-splitting tensor of the triplet, principal values in MHz.
tensor::SymTensor3 zfs_calculated();          // -1218, 911, 307
tensor::SymTensor3 zfs_experimental_abs();    // |941|, |800|, |142|
inline constexpr double zfs_avg_calculated_mhz = 1365.0;
inline constexpr double zfs_avg_experimental_mhz = 1210.0;

// 29Si hyperfine tensor, principal values in MHz.
tensor::SymTensor3 hyperfine_calculated();    // -347, -324, -267
tensor::SymTensor3 hyperfine_experimental();  // 339, 312, 273

}  // namespace gcenter::refdata
