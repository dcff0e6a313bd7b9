#include "gcenter/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gcenter/errors.hpp"
#include "gcenter/units.hpp"

namespace gcenter::spectrum {

namespace {

std::vector<double> boltzmann_weights(const std::vector<rotor::BandLevel>& band,
                                      double temperature_k) {
  const double e_min = band.front().energy_mev;
  std::vector<double> w(band.size());
  for (std::size_t i = 0; i < band.size(); ++i) {
    const double offset_mev = band[i].energy_mev - e_min;
    const double factor =
        std::isinf(temperature_k)
            ? 1.0
            : std::exp(-offset_mev / (constants.boltzmann_kB * temperature_k));
    w[i] = band[i].degeneracy * factor;
  }
  return w;
}

}  // namespace

LineList fine_structure_lines(
    const rotor::BandStructure& excited_band, double temperature_k,
    double zpl_energy_ev, Weighting weighting,
    const std::optional<rotor::BandStructure>& ground_band) {
  if (excited_band.wells != 6)
    throw usage_error("spectrum: fine structure assumes a sixfold well");
  if (!(temperature_k > 0.0))
    throw usage_error(
        "spectrum: temperature must be positive (+inf selects degeneracy "
        "weighting)");

  const std::vector<rotor::BandLevel>& band = excited_band.bands.front();
  std::vector<double> weights;
  switch (weighting) {
    case Weighting::emission:
      weights = boltzmann_weights(band, temperature_k);
      break;
    case Weighting::absorption:
      if (ground_band) {
        if (ground_band->bands.front().size() != band.size())
          throw usage_error(
              "spectrum: ground and excited bands have different sector "
              "counts");
        weights = boltzmann_weights(ground_band->bands.front(), temperature_k);
      } else {
        weights = boltzmann_weights(band,
                                    std::numeric_limits<double>::infinity());
      }
      break;
  }

  double total = 0.0;
  for (double w : weights) total += w;

  LineList out{zpl_energy_ev, {}};
  const double e_min = band.front().energy_mev;
  for (std::size_t i = 0; i < band.size(); ++i) {
    out.lines.push_back({(band[i].energy_mev - e_min) * 1e3,
                         band[i].degeneracy, weights[i] / total, band[i].k});
  }
  std::sort(out.lines.begin(), out.lines.end(),
            [](const Line& a, const Line& b) {
              return a.offset_uev < b.offset_uev;
            });
  return out;
}

double BroadeningModel::width_uev(double temperature_k) const {
  if (temperature_k < 0.0)
    throw usage_error("spectrum: temperature must be non-negative");
  if (temperature_k == 0.0) return w0_uev;
  return w0_uev + wa_uev * std::exp(-activation_mev /
                                    (constants.boltzmann_kB * temperature_k));
}

BroadeningModel BroadeningModel::calibrated(double w0, double activation_mev,
                                            double t_ref_k, double w_ref_uev,
                                            LineShape shape) {
  BroadeningModel m{w0, 0.0, activation_mev, shape};
  if (!(t_ref_k > 0.0) || !(w_ref_uev > w0))
    throw usage_error("spectrum: reference width must exceed w0 at T > 0");
  m.wa_uev = (w_ref_uev - w0) /
             std::exp(-activation_mev / (constants.boltzmann_kB * t_ref_k));
  return m;
}

SampledSpectrum broaden(const LineList& lines, const BroadeningModel& model,
                        double temperature_k, const EnergyGrid& grid) {
  if (lines.lines.empty()) throw usage_error("spectrum: empty line list");
  if (!(grid.step_uev > 0.0) || !(grid.max_uev > grid.min_uev))
    throw usage_error("spectrum: empty or inverted energy grid");

  const double w = model.width_uev(temperature_k);
  if (!(w > 0.0))
    throw usage_error("spectrum: zero linewidth; use w0 > 0 or T > 0");

  for (const Line& line : lines.lines) {
    if (line.offset_uev - 5.0 * w < grid.min_uev ||
        line.offset_uev + 5.0 * w > grid.max_uev)
      throw usage_error(
          "spectrum: grid must cover every line offset +- 5 widths");
  }

  const double points = (grid.max_uev - grid.min_uev) / grid.step_uev;
  if (points > 2e7)
    throw usage_error("spectrum: grid step too fine for the requested range");
  const int n = static_cast<int>(points) + 1;
  SampledSpectrum out;
  out.width_uev = w;
  out.offset_uev.resize(n);
  out.intensity_per_uev.assign(n, 0.0);
  for (int i = 0; i < n; ++i) out.offset_uev[i] = grid.min_uev + i * grid.step_uev;

  std::vector<double> profile(n);
  for (const Line& line : lines.lines) {
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = out.offset_uev[i] - line.offset_uev;
      double y;
      if (model.shape == LineShape::gaussian) {
        const double sigma = w / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
        y = std::exp(-0.5 * (x / sigma) * (x / sigma)) /
            (sigma * std::sqrt(2.0 * std::numbers::pi));
      } else {
        const double hwhm = 0.5 * w;
        y = hwhm / (std::numbers::pi * (x * x + hwhm * hwhm));
      }
      profile[i] = y;
      const double trap = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      area += trap * y * grid.step_uev;
    }
    // renormalize on the grid so truncation does not leak area
    for (int i = 0; i < n; ++i)
      out.intensity_per_uev[i] += line.intensity * profile[i] / area;
  }
  return out;
}

int count_local_maxima(const SampledSpectrum& s) {
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < s.intensity_per_uev.size(); ++i) {
    if (s.intensity_per_uev[i] > s.intensity_per_uev[i - 1] &&
        s.intensity_per_uev[i] > s.intensity_per_uev[i + 1])
      ++peaks;
  }
  return peaks;
}

}  // namespace gcenter::spectrum
