#pragma once

#include "gcenter/rotor.hpp"

namespace gcenter::isotope {

// Which electronic states contribute to the observed line shift:
//   excited_only  - shift of the excited-state rotational zero point alone
//   both_states   - change of the excited-minus-ground zero-point difference
enum class Recipe { excited_only, both_states };

struct IsotopeScaling {
  double reference_mass_u = 28.0;
  // Fraction of the mass-weighted path length attributed to the
  // substituted atom; the one-line scaling rule under-determines it, so it
  // is an explicit, calibratable parameter.
  double participation_fraction = 1.0;
  Recipe recipe = Recipe::excited_only;

  void validate() const;
};

// L' = L * sqrt(1 + f * (m_new - m_ref) / m_ref); barrier and well count
// are unchanged by substitution.
rotor::RotorPotential scale_path(const rotor::RotorPotential& pot,
                                 const IsotopeScaling& scaling,
                                 double new_mass_u);

struct IsotopeShift {
  double magnitude_uev;
  double signed_uev;  // positive when the substituted zero point lies higher
};

IsotopeShift zpl_isotope_shift(const rotor::RotorPotential& excited,
                               const rotor::RotorPotential& ground,
                               const IsotopeScaling& scaling,
                               double new_mass_u);

// Participation fraction in (0, 1] that reproduces target_shift_uev at
// target_mass_u.  Throws calibration_error when the target is out of
// reach, reporting the attainable range.
double calibrate_participation(const rotor::RotorPotential& excited,
                               const rotor::RotorPotential& ground,
                               Recipe recipe, double target_shift_uev,
                               double target_mass_u,
                               double reference_mass_u = 28.0);

}  // namespace gcenter::isotope
