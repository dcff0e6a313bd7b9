#pragma once

#include <numbers>
#include <string_view>

namespace gcenter {

// Single authority for physical constants and unit conversions.  Every
// other module pulls numbers from here; a source-audit test enforces that
// none of the SI literals below is repeated elsewhere in the library.
//
// CODATA-2018 values, fixed at build time for bit-reproducible output.
namespace codata {

inline constexpr double planck_J_s = 6.62607015e-34;         // exact (SI 2019)
inline constexpr double elementary_charge_C = 1.602176634e-19;  // exact
inline constexpr double boltzmann_J_per_K = 1.380649e-23;    // exact
inline constexpr double atomic_mass_kg = 1.66053906660e-27;
inline constexpr double bohr_magneton_J_per_T = 9.2740100783e-24;
inline constexpr double g_electron = 2.00231930436256;       // |g_e|

}  // namespace codata

struct PhysicalConstants {
  // hbar^2/2 in meV u A^2: kinetic prefactor of a mass-weighted coordinate
  // measured in sqrt(u) Angstrom.
  double kinetic_coefficient;
  double planck_h;            // ueV per GHz
  double boltzmann_kB;        // meV per K
  double bohr_magneton_over_h;  // GHz per T
  double g_free_electron;     // dimensionless
};

constexpr PhysicalConstants physical_constants() {
  constexpr double joule_per_mev = codata::elementary_charge_C * 1e-3;
  constexpr double hbar = codata::planck_J_s / (2.0 * std::numbers::pi);
  return PhysicalConstants{
      // hbar^2 / (2 u A^2), expressed in meV
      .kinetic_coefficient =
          hbar * hbar / (2.0 * codata::atomic_mass_kg * 1e-20) / joule_per_mev,
      // h * 1 GHz in ueV
      .planck_h = codata::planck_J_s * 1e9 / (joule_per_mev * 1e-3),
      .boltzmann_kB = codata::boltzmann_J_per_K / joule_per_mev,
      .bohr_magneton_over_h =
          codata::bohr_magneton_J_per_T / codata::planck_J_s * 1e-9,
      .g_free_electron = codata::g_electron,
  };
}

inline constexpr PhysicalConstants constants = physical_constants();

// Default isotropic g for the triplet spin system; overridable per system.
inline constexpr double default_defect_g = 2.0023;

enum class Unit {
  mev,
  uev,
  ghz,
  mhz,
  kelvin,      // energy as K * kB
  millikelvin  // energy as mK * kB
};

// Parses one of: meV, ueV (or µeV/μeV), GHz, MHz, K, mK.
// Throws usage_error on anything else.
Unit parse_unit(std::string_view token);

const char* unit_name(Unit u);

// Exact linear conversion between the energy-equivalent units above.
double convert_energy(double value, Unit from, Unit to);

}  // namespace gcenter
