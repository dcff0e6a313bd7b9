#include "gcenter/isotope.hpp"

#include <cmath>
#include <sstream>

#include "gcenter/errors.hpp"

namespace gcenter::isotope {

namespace {

double zero_point_mev(const rotor::RotorPotential& pot) {
  return rotor::solve_bands(pot, {}).ground_level_mev();
}

double shift_signed_uev(const rotor::RotorPotential& excited,
                        const rotor::RotorPotential& ground,
                        const IsotopeScaling& scaling, double new_mass_u) {
  const double exc =
      (zero_point_mev(scale_path(excited, scaling, new_mass_u)) -
       zero_point_mev(excited)) *
      1e3;
  if (scaling.recipe == Recipe::excited_only) return exc;
  const double gnd =
      (zero_point_mev(scale_path(ground, scaling, new_mass_u)) -
       zero_point_mev(ground)) *
      1e3;
  return exc - gnd;
}

}  // namespace

void IsotopeScaling::validate() const {
  if (!(reference_mass_u > 0.0))
    throw usage_error("isotope: reference mass must be positive");
  if (!(participation_fraction > 0.0) || participation_fraction > 1.0)
    throw usage_error("isotope: participation fraction must be in (0, 1]");
}

rotor::RotorPotential scale_path(const rotor::RotorPotential& pot,
                                 const IsotopeScaling& scaling,
                                 double new_mass_u) {
  pot.validate();
  scaling.validate();
  if (!(new_mass_u > 0.0))
    throw usage_error("isotope: mass must be positive");

  const double arg = 1.0 + scaling.participation_fraction *
                               (new_mass_u - scaling.reference_mass_u) /
                               scaling.reference_mass_u;
  if (!(arg > 0.0))
    throw usage_error("isotope: mass change would collapse the path length");

  rotor::RotorPotential scaled = pot;
  scaled.length = pot.length * std::sqrt(arg);
  return scaled;
}

IsotopeShift zpl_isotope_shift(const rotor::RotorPotential& excited,
                               const rotor::RotorPotential& ground,
                               const IsotopeScaling& scaling,
                               double new_mass_u) {
  const double s = shift_signed_uev(excited, ground, scaling, new_mass_u);
  return {std::fabs(s), s};
}

double calibrate_participation(const rotor::RotorPotential& excited,
                               const rotor::RotorPotential& ground,
                               Recipe recipe, double target_shift_uev,
                               double target_mass_u, double reference_mass_u) {
  if (!(target_shift_uev > 0.0))
    throw calibration_error(
        "isotope: target shift must be positive (f = 0 is excluded)");

  auto shift_at = [&](double f) {
    IsotopeScaling s{reference_mass_u, f, recipe};
    return zpl_isotope_shift(excited, ground, s, target_mass_u).magnitude_uev;
  };

  const double f_lo = 1e-6;
  const double lo = shift_at(f_lo), hi = shift_at(1.0);
  const double attain_lo = std::min(lo, hi), attain_hi = std::max(lo, hi);
  if (target_shift_uev < attain_lo || target_shift_uev > attain_hi) {
    std::ostringstream os;
    os << "isotope: target shift " << target_shift_uev
       << " ueV unreachable with f in (0, 1]; attainable range is ["
       << attain_lo << ", " << attain_hi << "] ueV";
    throw calibration_error(os.str());
  }

  NumericsConfig cfg;
  cfg.root_rel_tol = 1e-12;
  return find_root(
      [&](double f) { return shift_at(f) - target_shift_uev; }, f_lo, 1.0,
      cfg);
}

}  // namespace gcenter::isotope
