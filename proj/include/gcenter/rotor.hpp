#pragma once

#include <optional>
#include <vector>

#include "gcenter/numerics.hpp"

namespace gcenter::rotor {

// Hindered rotor on a ring: mass-weighted path coordinate q in sqrt(u) A,
// circumference L, potential V(q) = (V0/2) * (1 - cos(2 pi N q / L)).
struct RotorPotential {
  double length;       // L, sqrt(u) Angstrom
  double barrier_mev;  // V0
  int wells = 6;       // N

  void validate() const;  // throws usage_error
};

// Plane-wave (Bloch) sector Hamiltonian.  Basis exp(i 2 pi (N j + k) q / L),
// j in [-jmax, jmax]; the cosine couples j to j+-1, so each sector is
// symmetric tridiagonal:
//   diagonal[j] = kinetic_coefficient * (2 pi (N j + k) / L)^2 + V0/2
//   off[j]      = -V0/4
struct SectorHamiltonian {
  int k;
  int jmax;
  SymTridiag matrix;
};

SectorHamiltonian build_sector(const RotorPotential& pot, int k, int jmax);

struct BandLevel {
  int k;              // momentum sector, 0..N/2
  double energy_mev;
  int degeneracy;     // 1 for k = 0 or k = N/2, else 2 (+-k pair)
};

struct BandStructure {
  int wells;
  std::vector<std::vector<BandLevel>> bands;  // bands[b][k], k ascending
  double delta_uev;            // ground-band edge splitting / 4
  double total_splitting_uev;  // ground bandwidth; 4*delta by definition
  double hbar_omega_mev;       // gap between the two lowest bands
  int jmax_used;

  double ground_level_mev() const { return bands.front().front().energy_mev; }
  double band_centroid_mev(std::size_t b) const;
};

enum class GapMode {
  band_centroid,  // centroid(band 1) - centroid(band 0)
  lowest_gap      // min(band 1) - min(band 0), for sensitivity studies
};

struct SolveOptions {
  int jmax = 64;        // starting basis half-width; escalated as needed
  int n_bands = 2;
  GapMode gap_mode = GapMode::band_centroid;
  double delta_rel_tol = 1e-3;  // basis accepted once delta moves less
  int jmax_cap = 2000;
};

// Single diagonalization at a fixed basis size (no escalation).  Useful
// for convergence studies and as the smooth objective inside the fit.
BandStructure solve_bands_fixed(const RotorPotential& pot, int jmax,
                                int n_bands = 2,
                                GapMode gap_mode = GapMode::band_centroid);

// Band structure with automatic basis escalation: solves at jmax and
// 1.5*jmax, accepts when delta agrees to delta_rel_tol, otherwise doubles.
// Throws compute_error if jmax_cap is exceeded.
BandStructure solve_bands(const RotorPotential& pot,
                          const SolveOptions& opts = {});

// Small-oscillation quantum of one well, (2 pi N / L) sqrt(c V0).
// Upper bound for the full band gap (anharmonicity softens it).
double harmonic_estimate(const RotorPotential& pot);

struct FitTargets {
  double hbar_omega_mev;
  double delta_uev;
};

// Inverts solve_bands for (L, V0) at fixed N.  Newton on (log L, log V0)
// against residuals (hbar_omega ratio - 1, log delta ratio).
RotorPotential fit_potential(const FitTargets& targets, int wells = 6,
                             std::optional<RotorPotential> init = std::nullopt);

}  // namespace gcenter::rotor
