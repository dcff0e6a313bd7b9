#pragma once

#include <optional>
#include <vector>

#include "gcenter/rotor.hpp"

namespace gcenter::spectrum {

struct Line {
  double offset_uev;   // relative to the lowest excited rotational level
  int degeneracy;
  double intensity;    // normalized, sums to 1 over the list
  int sector_k;
};

struct LineList {
  double zpl_energy_ev;   // absolute anchor of the zero-offset line
  std::vector<Line> lines;  // ascending offsets
};

// Emission weights lines by the Boltzmann population of the excited
// rotational manifold; absorption by the (quasi-degenerate) ground one.
enum class Weighting { emission, absorption };

// Quartet line list from the excited-state ground band: offsets
// {0, delta, 3 delta, 4 delta} for a sixfold well, intensity proportional
// to degeneracy times exp(-offset / kB T), normalized.
// T = +infinity selects pure degeneracy weighting; T <= 0 is an error.
// For absorption weighting, pass the electronic-ground-state band (its
// thermal factors matter only if its splitting is resolvable); omitted it
// falls back to degeneracy weights.
LineList fine_structure_lines(
    const rotor::BandStructure& excited_band, double temperature_k,
    double zpl_energy_ev, Weighting weighting = Weighting::emission,
    const std::optional<rotor::BandStructure>& ground_band = std::nullopt);

enum class LineShape { gaussian, lorentzian };

struct BroadeningModel {
  double w0_uev = 0.1;          // residual width (FWHM)
  double wa_uev;                // Arrhenius prefactor
  double activation_mev = 12.4;
  LineShape shape = LineShape::gaussian;

  // FWHM w(T) = w0 + wa * exp(-Ea / kB T)
  double width_uev(double temperature_k) const;

  // Prefactor chosen so the quartet is fully merged at the reference
  // temperature: w(t_ref) = w_ref.  A calibration, not a prediction.
  static BroadeningModel calibrated(double w0_uev, double activation_mev,
                                    double t_ref_k = 20.0,
                                    double w_ref_uev = 12.0,
                                    LineShape shape = LineShape::gaussian);
};

struct EnergyGrid {
  double min_uev;
  double max_uev;
  double step_uev;
};

struct SampledSpectrum {
  std::vector<double> offset_uev;
  std::vector<double> intensity_per_uev;
  double width_uev;  // FWHM used
};

// Sum of unit-area profiles of FWHM w(T), one per line, scaled by line
// intensity.  Each profile is renormalized on the grid, so the integrated
// area equals the intensity sum regardless of shape or step.
SampledSpectrum broaden(const LineList& lines, const BroadeningModel& model,
                        double temperature_k, const EnergyGrid& grid);

// Strict interior local maxima of the sampled spectrum.
int count_local_maxima(const SampledSpectrum& s);

}  // namespace gcenter::spectrum
