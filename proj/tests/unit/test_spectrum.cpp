#include <doctest.h>

#include <cmath>
#include <limits>

#include "gcenter/errors.hpp"
#include "gcenter/rotor.hpp"
#include "gcenter/spectrum.hpp"
#include "gcenter/units.hpp"

using namespace gcenter;
using namespace gcenter::spectrum;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// synthetic quartet band with an exact splitting delta
rotor::BandStructure synthetic_band(double delta_uev) {
  rotor::BandStructure bs;
  bs.wells = 6;
  bs.jmax_used = 0;
  const double d_mev = delta_uev * 1e-3;
  bs.bands = {{{0, 10.0, 1},
               {1, 10.0 + d_mev, 2},
               {2, 10.0 + 3.0 * d_mev, 2},
               {3, 10.0 + 4.0 * d_mev, 1}},
              {{0, 22.0, 1}, {1, 22.0, 2}, {2, 22.0, 2}, {3, 22.0, 1}}};
  bs.delta_uev = delta_uev;
  bs.total_splitting_uev = 4.0 * delta_uev;
  bs.hbar_omega_mev = 12.0;
  return bs;
}

double total_area(const SampledSpectrum& s) {
  double area = 0.0;
  const double step = s.offset_uev[1] - s.offset_uev[0];
  for (std::size_t i = 0; i < s.intensity_per_uev.size(); ++i) {
    const double w =
        (i == 0 || i + 1 == s.intensity_per_uev.size()) ? 0.5 : 1.0;
    area += w * s.intensity_per_uev[i] * step;
  }
  return area;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("line offsets follow the delta, 3 delta, 4 delta ladder") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97);
  REQUIRE(lines.lines.size() == 4);
  CHECK(lines.lines[0].offset_uev == doctest::Approx(0.0));
  CHECK(lines.lines[1].offset_uev == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(lines.lines[2].offset_uev == doctest::Approx(7.5).epsilon(1e-12));
  CHECK(lines.lines[3].offset_uev == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(lines.lines[0].degeneracy == 1);
  CHECK(lines.lines[1].degeneracy == 2);
  CHECK(lines.lines[2].degeneracy == 2);
  CHECK(lines.lines[3].degeneracy == 1);
  CHECK(lines.zpl_energy_ev == 0.97);
}

TEST_CASE("line offsets from a solved band keep the 1:2:1 spacing") {
  const rotor::BandStructure bs = rotor::solve_bands({22.5, 33.0, 6}, {});
  const LineList lines = fine_structure_lines(bs, 1.4, 0.97);
  const double s1 = lines.lines[1].offset_uev - lines.lines[0].offset_uev;
  const double s2 = lines.lines[2].offset_uev - lines.lines[1].offset_uev;
  const double s3 = lines.lines[3].offset_uev - lines.lines[2].offset_uev;
  CHECK(s2 / (2.0 * s1) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(s3 / s1 == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("infinite temperature weights by degeneracy alone") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), kInf, 0.97);
  CHECK(lines.lines[0].intensity == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(lines.lines[1].intensity == doctest::Approx(2.0 / 6.0).epsilon(1e-12));
  CHECK(lines.lines[2].intensity == doctest::Approx(2.0 / 6.0).epsilon(1e-12));
  CHECK(lines.lines[3].intensity == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("Boltzmann ratio at 1.4 K") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97);
  // kB * 1.4 K = 120.64 ueV; exp(-10 / 120.64) = 0.920
  const double ratio = lines.lines[3].intensity / lines.lines[0].intensity;
  CHECK(ratio == doctest::Approx(0.920).epsilon(1e-3));
}

TEST_CASE("intensities are positive and sum to one at all temperatures") {
  for (double t : {0.5, 1.4, 4.2, 20.0, 300.0, kInf}) {
    const LineList lines =
        fine_structure_lines(synthetic_band(2.5), t, 0.97);
    double sum = 0.0;
    for (const Line& line : lines.lines) {
      CHECK(line.intensity > 0.0);
      sum += line.intensity;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("absorption weighting uses the quasi-degenerate ground manifold") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97,
                                              Weighting::absorption);
  // no resolvable ground splitting supplied: pure degeneracy weights
  CHECK(lines.lines[0].intensity == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(lines.lines[3].intensity == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  // with an explicit ground band its thermal factors take over; a
  // sub-0.01 ueV splitting is indistinguishable from degeneracy weights
  const rotor::BandStructure ground = rotor::solve_bands({31.97, 89.0, 6}, {});
  const LineList resolved = fine_structure_lines(
      synthetic_band(2.5), 1.4, 0.97, Weighting::absorption, ground);
  CHECK(resolved.lines[0].intensity ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-4));
  CHECK(resolved.lines[3].intensity ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-4));
  // but a visibly split ground band tilts the weights toward k = 0
  const LineList tilted = fine_structure_lines(
      synthetic_band(2.5), 1.4, 0.97, Weighting::absorption,
      synthetic_band(50.0));
  CHECK(tilted.lines[0].intensity > tilted.lines[3].intensity);

  rotor::BandStructure mismatched = synthetic_band(2.5);
  mismatched.bands.front().pop_back();
  CHECK_THROWS_AS(fine_structure_lines(synthetic_band(2.5), 1.4, 0.97,
                                       Weighting::absorption, mismatched),
                  usage_error);
}

TEST_CASE("temperature contract") {
  CHECK_THROWS_AS(fine_structure_lines(synthetic_band(2.5), 0.0, 0.97),
                  usage_error);
  CHECK_THROWS_AS(fine_structure_lines(synthetic_band(2.5), -4.0, 0.97),
                  usage_error);
  rotor::BandStructure wrong_n = synthetic_band(2.5);
  wrong_n.wells = 4;
  CHECK_THROWS_AS(fine_structure_lines(wrong_n, 1.4, 0.97), usage_error);
}

TEST_CASE("width model: Arrhenius limit and calibration") {
  const BroadeningModel m = BroadeningModel::calibrated(0.1, 12.4);
  CHECK(m.width_uev(0.0) == doctest::Approx(0.1));
  CHECK(m.width_uev(1e-3) == doctest::Approx(0.1));
  CHECK(m.width_uev(20.0) == doctest::Approx(12.0).epsilon(1e-12));
  // activated widths grow monotonically
  CHECK(m.width_uev(10.0) < m.width_uev(15.0));
  CHECK(m.width_uev(15.0) < m.width_uev(20.0));
}

TEST_CASE("broadened area is the intensity sum for any shape and step") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97);
  for (LineShape shape : {LineShape::gaussian, LineShape::lorentzian}) {
    for (double step : {0.005, 0.02, 0.09}) {
      BroadeningModel m{0.4, 0.0, 12.4, shape};
      const SampledSpectrum s =
          broaden(lines, m, 1.4, {-15.0, 25.0, step});
      CHECK(total_area(s) == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("quartet resolves cold and merges hot") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97);
  const BroadeningModel m = BroadeningModel::calibrated(0.1, 12.4);

  const EnergyGrid grid{-61.0, 71.0, 0.01};
  const SampledSpectrum cold = broaden(lines, m, 1.4, grid);
  CHECK(cold.width_uev == doctest::Approx(0.1));
  CHECK(count_local_maxima(cold) == 4);

  const SampledSpectrum hot = broaden(lines, m, 20.0, grid);
  CHECK(hot.width_uev >= 10.0);
  CHECK(count_local_maxima(hot) == 1);
}

TEST_CASE("peak count never grows with the linewidth") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97);
  int prev = 5;
  for (double w : {0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    BroadeningModel m{w, 0.0, 12.4, LineShape::gaussian};
    const SampledSpectrum s = broaden(lines, m, 1.4, {-90.0, 100.0, 0.02});
    const int peaks = count_local_maxima(s);
    CHECK(peaks <= prev);
    prev = peaks;
  }
}

TEST_CASE("grid contract violations") {
  const LineList lines = fine_structure_lines(synthetic_band(2.5), 1.4, 0.97);
  BroadeningModel m{0.1, 0.0, 12.4, LineShape::gaussian};
  // empty and inverted grids
  CHECK_THROWS_AS(broaden(lines, m, 1.4, {0.0, 0.0, 0.1}), usage_error);
  CHECK_THROWS_AS(broaden(lines, m, 1.4, {5.0, -5.0, 0.1}), usage_error);
  CHECK_THROWS_AS(broaden(lines, m, 1.4, {-1.0, 1.0, 0.0}), usage_error);
  // grid missing the outer lines
  CHECK_THROWS_AS(broaden(lines, m, 1.4, {-1.0, 5.0, 0.01}), usage_error);
  // zero width
  BroadeningModel flat{0.0, 0.0, 12.4, LineShape::gaussian};
  CHECK_THROWS_AS(broaden(lines, flat, 1.4, {-10.0, 20.0, 0.01}), usage_error);
}

}  // TEST_SUITE
