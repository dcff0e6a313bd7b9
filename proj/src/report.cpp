#include "gcenter/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "gcenter/io.hpp"
#include "gcenter/isotope.hpp"
#include "gcenter/rates.hpp"
#include "gcenter/refdata.hpp"
#include "gcenter/rotor.hpp"
#include "gcenter/spectrum.hpp"
#include "gcenter/spin.hpp"
#include "gcenter/tensor.hpp"
#include "gcenter/units.hpp"

namespace gcenter::report {

namespace {

std::string window(double lo, double hi, const char* unit) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "in [%g, %g] %s", lo, hi, unit);
  return buf;
}

void push_window(std::vector<Check>& checks, const std::string& name,
                 double value, const char* unit, double lo, double hi) {
  checks.push_back({name, value, unit, window(lo, hi, unit),
                    value >= lo && value <= hi});
}

}  // namespace

std::vector<Check> reproduction_checks() {
  using rotor::solve_bands;
  std::vector<Check> checks;

  // Singlet excited state: quartet structure of the PL fine structure.
  const rotor::BandStructure singlet =
      solve_bands(refdata::singlet_excited_potential(), {});
  push_window(checks, "singlet delta", singlet.delta_uev, "ueV", 2.0, 3.0);
  push_window(checks, "singlet total splitting / delta",
              singlet.total_splitting_uev / singlet.delta_uev, "", 3.92, 4.08);
  {
    const auto& band = singlet.bands.front();
    const double s1 = band[1].energy_mev - band[0].energy_mev;
    const double s2 = band[2].energy_mev - band[1].energy_mev;
    const double s3 = band[3].energy_mev - band[2].energy_mev;
    push_window(checks, "singlet spacing ratio 2/1", s2 / s1, "", 1.98, 2.02);
    push_window(checks, "singlet spacing ratio 3/1", s3 / s1, "", 0.99, 1.01);
  }
  push_window(checks, "singlet band gap", singlet.hbar_omega_mev, "meV", 11.0,
              14.0);
  {
    const double harmonic =
        rotor::harmonic_estimate(refdata::singlet_excited_potential());
    checks.push_back({"singlet gap below harmonic estimate",
                      singlet.hbar_omega_mev, "meV",
                      "< " + io::format_double(harmonic) + " meV",
                      singlet.hbar_omega_mev < harmonic});
  }

  // Triplet state: smaller splitting, athermal reorientation rate.
  const rotor::BandStructure triplet =
      solve_bands(refdata::triplet_potential(), {});
  push_window(checks, "triplet delta", triplet.delta_uev, "ueV", 0.15, 0.33);
  const rates::RateParams triplet_rates{triplet.delta_uev, 0.0, 0.0};
  push_window(checks, "triplet gamma0", rates::gamma0(triplet_rates) * 1e-9,
              "GHz", 0.22, 0.48);

  // Electronic ground state: quasi-degenerate sextet.
  const rotor::BandStructure ground =
      solve_bands(refdata::electronic_ground_potential(), {});
  push_window(checks, "ground-state delta", ground.delta_uev, "ueV", 0.0,
              0.01);

  // Potential fit against the observed gap and splitting.
  {
    const rotor::RotorPotential fitted = rotor::fit_potential(
        {refdata::activation_energy_mev, refdata::singlet_delta_uev}, 6);
    const rotor::RotorPotential ref = refdata::singlet_excited_potential();
    push_window(checks, "fitted path length", fitted.length, "sqrt(u)A",
                0.9 * ref.length, 1.1 * ref.length);
    push_window(checks, "fitted barrier", fitted.barrier_mev, "meV",
                0.9 * ref.barrier_mev, 1.1 * ref.barrier_mev);
  }

  // Isotope shifts with the participation fraction calibrated at 29Si.
  {
    const rotor::RotorPotential exc = refdata::singlet_excited_potential();
    const rotor::RotorPotential gnd = refdata::electronic_ground_potential();
    const double f = isotope::calibrate_participation(
        exc, gnd, isotope::Recipe::excited_only,
        refdata::isotope_shift_29si_uev, 29.0);
    push_window(checks, "participation fraction", f, "", 0.0, 1.0);
    const isotope::IsotopeScaling scaling{28.0, f,
                                          isotope::Recipe::excited_only};
    push_window(checks, "29Si shift (calibrated)",
                isotope::zpl_isotope_shift(exc, gnd, scaling, 29.0)
                    .magnitude_uev,
                "ueV", refdata::isotope_shift_29si_uev - 0.1,
                refdata::isotope_shift_29si_uev + 0.1);
    push_window(checks, "30Si shift (predicted)",
                isotope::zpl_isotope_shift(exc, gnd, scaling, 30.0)
                    .magnitude_uev,
                "ueV", 100.0, 112.0);
  }

  // Motional averaging of the calculated ZFS tensor.
  {
    const tensor::SymTensor3 d = refdata::zfs_calculated();
    const tensor::AxisFrame frame =
        tensor::AxisFrame::about(tensor::middle_eigenvector(d), 3);
    const tensor::SymTensor3 avg = tensor::average_over_rotations(d, frame);
    const tensor::AxialParameters ax =
        tensor::axial_parameters(avg, frame.axis);
    push_window(checks, "averaged ZFS D", ax.d_mhz, "MHz", 1366.0, 1367.0);
    push_window(checks, "averaged ZFS D vs reported",
                std::fabs(ax.d_mhz / refdata::zfs_avg_calculated_mhz - 1.0),
                "", 0.0, 0.0015);
    push_window(checks, "averaged ZFS E", std::fabs(ax.e_mhz), "MHz", 0.0,
                1e-9);
  }

  // Reorientation rate model around the observed regime crossover.
  {
    const rates::RateParams p{triplet.delta_uev, 0.0, 0.0};
    const double probe_hz = refdata::odmr_probe_ghz * 1e9;
    const double beta = rates::calibrate_beta(
        p, refdata::regime_crossover_temperature_k, probe_hz);
    push_window(checks, "calibrated beta", beta, "Hz/K^5", 1.09e7, 1.13e7);
    const rates::RateParams cal{triplet.delta_uev, 0.0, beta};
    checks.push_back(
        {"regime at 6 K", rates::classify_regime(cal, {probe_hz, 6.0}).margin_ratio,
         "x probe", "motionally averaged (ratio >= 1)",
         rates::classify_regime(cal, {probe_hz, 6.0}).regime ==
             rates::Regime::motionally_averaged});
    checks.push_back(
        {"regime at 30 K",
         rates::classify_regime(cal, {probe_hz, 30.0}).margin_ratio, "x probe",
         "motionally averaged (ratio >= 1)",
         rates::classify_regime(cal, {probe_hz, 30.0}).regime ==
             rates::Regime::motionally_averaged});
    checks.push_back(
        {"athermal regime", rates::classify_regime(p, {probe_hz, 1e-6}).margin_ratio,
         "x probe", "static low symmetry (ratio < 1)",
         rates::classify_regime(p, {probe_hz, 1e-6}).regime ==
             rates::Regime::static_low_symmetry});
  }

  // Line synthesis: resolved quartet cold, merged at 20 K.
  {
    const spectrum::LineList lines = spectrum::fine_structure_lines(
        singlet, refdata::quartet_resolved_temperature_k,
        refdata::zpl_energy_ev);
    const spectrum::BroadeningModel model = spectrum::BroadeningModel::calibrated(
        0.1, refdata::activation_energy_mev);
    const double span = lines.lines.back().offset_uev;
    const spectrum::EnergyGrid grid{-0.2 * span - 60.0, 1.2 * span + 60.0,
                                    span / 400.0};
    const int cold_peaks = spectrum::count_local_maxima(spectrum::broaden(
        lines, model, refdata::quartet_resolved_temperature_k, grid));
    const int warm_peaks = spectrum::count_local_maxima(spectrum::broaden(
        lines, model, refdata::quartet_merged_temperature_k, grid));
    push_window(checks, "resolved quartet peaks (1.4 K)", cold_peaks, "", 4,
                4);
    push_window(checks, "merged peaks (20 K)", warm_peaks, "", 1, 1);
  }

  // Triplet spin engine spot values.
  {
    spin::TripletSpinSystem sys;
    sys.d_mhz = refdata::zfs_calculated();
    const auto zero_field = spin::levels(sys, Eigen::Vector3d::Zero());
    push_window(checks, "zero-field level 1", zero_field[0], "MHz",
                -911.0 - 1e-6, -911.0 + 1e-6);
    push_window(checks, "zero-field level 2", zero_field[1], "MHz",
                -307.0 - 1e-6, -307.0 + 1e-6);
    push_window(checks, "zero-field level 3", zero_field[2], "MHz",
                1218.0 - 1e-6, 1218.0 + 1e-6);

    spin::TripletSpinSystem free_spin;  // D = 0
    const auto res = spin::resonance_fields(
        free_spin, refdata::odmr_field_direction(), refdata::odmr_probe_ghz,
        2.0);
    const double b0 = res.empty() ? 0.0 : res.front().b_tesla;
    push_window(checks, "free-spin resonance field", b0, "T", 1.2488, 1.2490);
  }

  return checks;
}

std::string render_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "G-center reproduction report\n";
  os << "----------------------------\n";
  int failed = 0;
  for (const Check& c : checks) {
    char line[192];
    std::snprintf(line, sizeof(line), "[%s] %-36s %14.6g %-8s (%s)\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.computed,
                  c.unit.c_str(), c.target.c_str());
    os << line;
    if (!c.pass) ++failed;
  }
  os << "----------------------------\n";
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string render_json(const std::vector<Check>& checks) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["report"] = "g-center reproduction";
  auto& list = doc["checks"];
  list = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    list.push_back({{"name", c.name},
                    {"computed", c.computed},
                    {"unit", c.unit},
                    {"target", c.target},
                    {"pass", c.pass}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace gcenter::report
