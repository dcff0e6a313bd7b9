#include "gcenter/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gcenter/errors.hpp"
#include "gcenter/units.hpp"

namespace gcenter::rotor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int max_sector(int wells) { return wells / 2; }

int sector_degeneracy(int k, int wells) {
  if (k == 0) return 1;
  if (2 * k == wells) return 1;  // zone edge, N even
  return 2;
}

double matrix_scale(const SymTridiag& m) {
  double s = 0.0;
  for (double d : m.diagonal) s = std::max(s, std::fabs(d));
  for (double e : m.off_diagonal) s = std::max(s, std::fabs(e));
  return s;
}

}  // namespace

void RotorPotential::validate() const {
  if (!(length > 0.0) || !std::isfinite(length))
    throw usage_error("rotor: path length must be positive");
  if (!(barrier_mev >= 0.0) || !std::isfinite(barrier_mev))
    throw usage_error("rotor: barrier must be non-negative");
  if (wells < 1) throw usage_error("rotor: well count must be >= 1");
}

SectorHamiltonian build_sector(const RotorPotential& pot, int k, int jmax) {
  pot.validate();
  if (std::abs(k) > max_sector(pot.wells)) {
    std::ostringstream os;
    os << "rotor: sector k=" << k << " outside the first Brillouin zone of a "
       << pot.wells << "-well ring";
    throw usage_error(os.str());
  }
  if (jmax < 4) throw usage_error("rotor: jmax must be >= 4");

  const int n = 2 * jmax + 1;
  SectorHamiltonian h{k, jmax, {}};
  h.matrix.diagonal.resize(n);
  h.matrix.off_diagonal.assign(n - 1, -0.25 * pot.barrier_mev);
  for (int idx = 0; idx < n; ++idx) {
    const int j = idx - jmax;
    const double wavenumber = kTwoPi * (pot.wells * j + k) / pot.length;
    h.matrix.diagonal[idx] =
        constants.kinetic_coefficient * wavenumber * wavenumber +
        0.5 * pot.barrier_mev;
  }
  return h;
}

double BandStructure::band_centroid_mev(std::size_t b) const {
  double sum = 0.0;
  int states = 0;
  for (const BandLevel& lv : bands.at(b)) {
    sum += lv.degeneracy * lv.energy_mev;
    states += lv.degeneracy;
  }
  return sum / states;
}

BandStructure solve_bands_fixed(const RotorPotential& pot, int jmax,
                                int n_bands, GapMode gap_mode) {
  pot.validate();
  if (n_bands < 2) throw usage_error("rotor: need at least two bands");

  const int kmax = max_sector(pot.wells);
  BandStructure out;
  out.wells = pot.wells;
  out.jmax_used = jmax;
  out.bands.assign(n_bands, {});

  for (int k = 0; k <= kmax; ++k) {
    const SectorHamiltonian h = build_sector(pot, k, jmax);
    const std::vector<double> evs = eig_tridiag(h.matrix, n_bands);
    for (int b = 0; b < n_bands; ++b)
      out.bands[b].push_back({k, evs[b], sector_degeneracy(k, pot.wells)});
  }

  // Ground band of a cosine well disperses upward with |k|.
  for (std::size_t i = 1; i < out.bands[0].size(); ++i) {
    if (out.bands[0][i].energy_mev + 1e-9 < out.bands[0][i - 1].energy_mev)
      throw compute_error("rotor: ground band not ascending in k");
  }

  const double bandwidth =
      out.bands[0].back().energy_mev - out.bands[0].front().energy_mev;
  out.total_splitting_uev = bandwidth * 1e3;
  out.delta_uev = out.total_splitting_uev / 4.0;
  if (gap_mode == GapMode::band_centroid) {
    out.hbar_omega_mev = out.band_centroid_mev(1) - out.band_centroid_mev(0);
  } else {
    // band 1 disperses downward in k, so its minimum is not at k = 0
    double excited_min = out.bands[1].front().energy_mev;
    for (const BandLevel& lv : out.bands[1])
      excited_min = std::min(excited_min, lv.energy_mev);
    out.hbar_omega_mev = excited_min - out.bands[0].front().energy_mev;
  }
  return out;
}

BandStructure solve_bands(const RotorPotential& pot, const SolveOptions& opts) {
  pot.validate();
  int jmax = std::max(opts.jmax, 4);

  while (true) {
    const BandStructure coarse =
        solve_bands_fixed(pot, jmax, opts.n_bands, opts.gap_mode);
    const int jfine = jmax + (jmax + 1) / 2;
    const BandStructure fine =
        solve_bands_fixed(pot, jfine, opts.n_bands, opts.gap_mode);

    // Resolution floor: differences below the eigensolver's absolute
    // accuracy cannot be converged away by a larger basis.
    const double norm = matrix_scale(build_sector(pot, 0, jfine).matrix);
    const double floor_uev =
        std::max(1e3 * norm *
                     static_cast<double>(
                         std::numeric_limits<long double>::epsilon()),
                 1e-9) *
        1e3;
    const double change = std::fabs(fine.delta_uev - coarse.delta_uev);
    if (change <=
        std::max(opts.delta_rel_tol * std::fabs(fine.delta_uev), floor_uev))
      return fine;

    jmax *= 2;
    if (jmax > opts.jmax_cap) {
      std::ostringstream os;
      os << "rotor: tunneling splitting did not converge below jmax="
         << opts.jmax_cap << " (last delta=" << fine.delta_uev << " ueV)";
      throw compute_error(os.str());
    }
  }
}

double harmonic_estimate(const RotorPotential& pot) {
  pot.validate();
  return (kTwoPi * pot.wells / pot.length) *
         std::sqrt(constants.kinetic_coefficient * pot.barrier_mev);
}

namespace {

struct FixedBasisModel {
  RotorPotential shape;  // carries N; length/barrier replaced per call
  int jmax;
  GapMode gap_mode;

  BandStructure operator()(double log_length, double log_barrier) const {
    RotorPotential p = shape;
    p.length = std::exp(log_length);
    p.barrier_mev = std::exp(log_barrier);
    return solve_bands_fixed(p, jmax, 2, gap_mode);
  }
};

// First guess from the harmonic closed form plus a WKB-style estimate of
// the tunneling action K ~ ln(hbar_omega / (pi delta)).
RotorPotential initial_guess(const FitTargets& t, int wells) {
  const double c = constants.kinetic_coefficient;
  const double hw = t.hbar_omega_mev;
  const double delta_mev = t.delta_uev * 1e-3;
  const double action = std::max(std::log(hw / (std::numbers::pi * delta_mev)), 1.0);
  const double length = std::numbers::pi * wells * std::sqrt(c * action / hw);
  const double barrier =
      std::pow(hw * length / (kTwoPi * wells), 2) / c;
  return RotorPotential{length, barrier, wells};
}

}  // namespace

RotorPotential fit_potential(const FitTargets& targets, int wells,
                             std::optional<RotorPotential> init) {
  if (!(targets.hbar_omega_mev > 0.0) || !(targets.delta_uev > 0.0))
    throw usage_error("rotor: fit targets must be positive");

  RotorPotential start = init ? *init : initial_guess(targets, wells);
  start.wells = wells;
  start.validate();

  // Fix the basis size once so the Newton objective is smooth; the
  // escalation policy at the starting point already over-resolves delta.
  const BandStructure probe = solve_bands(start, {});
  const int jmax_fit = probe.jmax_used;
  const FixedBasisModel model{start, jmax_fit, GapMode::band_centroid};

  // Refine the barrier guess along log delta before Newton; delta falls
  // monotonically with V0 at fixed L.
  if (!init) {
    const double log_len = std::log(start.length);
    double lo = std::log(start.barrier_mev) - 2.0;
    double hi = std::log(start.barrier_mev) + 2.0;
    auto resid = [&](double log_v0) {
      return std::log(model(log_len, log_v0).delta_uev / targets.delta_uev);
    };
    if (resid(lo) > 0.0 && resid(hi) < 0.0) {
      NumericsConfig cfg;
      cfg.root_rel_tol = 1e-6;
      start.barrier_mev = std::exp(find_root(resid, lo, hi, cfg));
    }
  }

  auto residual = [&](const Eigen::Vector2d& x) -> Eigen::Vector2d {
    const BandStructure bands = model(x(0), x(1));
    return {bands.hbar_omega_mev / targets.hbar_omega_mev - 1.0,
            std::log(bands.delta_uev / targets.delta_uev)};
  };

  Eigen::Vector2d solution;
  try {
    solution = newton2(residual,
                       {std::log(start.length), std::log(start.barrier_mev)});
  } catch (const fit_error& e) {
    std::ostringstream os;
    os << "rotor: potential fit failed (" << e.what() << "); best iterate L="
       << std::exp(e.best_x()) << ", V0=" << std::exp(e.best_y())
       << ", residual=" << e.best_residual();
    throw fit_error(os.str(), std::exp(e.best_x()), std::exp(e.best_y()),
                    e.best_residual());
  }

  const RotorPotential fitted{std::exp(solution(0)), std::exp(solution(1)),
                              wells};
  const BandStructure check = solve_bands(fitted, {});
  if (std::fabs(check.hbar_omega_mev / targets.hbar_omega_mev - 1.0) > 1e-4 ||
      std::fabs(check.delta_uev / targets.delta_uev - 1.0) > 1e-4) {
    throw fit_error("rotor: fitted potential fails to reproduce targets",
                    fitted.length, fitted.barrier_mev,
                    std::fabs(check.delta_uev / targets.delta_uev - 1.0));
  }
  return fitted;
}

}  // namespace gcenter::rotor
