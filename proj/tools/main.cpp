// gcenter: hindered-rotor tunneling, motional averaging and triplet
// spin-Hamiltonian models of the silicon G center.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcenter/errors.hpp"
#include "gcenter/io.hpp"
#include "gcenter/isotope.hpp"
#include "gcenter/rates.hpp"
#include "gcenter/refdata.hpp"
#include "gcenter/report.hpp"
#include "gcenter/rotor.hpp"
#include "gcenter/spectrum.hpp"
#include "gcenter/spin.hpp"
#include "gcenter/tensor.hpp"
#include "gcenter/units.hpp"

namespace {

using gcenter::usage_error;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------- output

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("GCENTER_OUTPUT_DIR"))
      return std::filesystem::path(dir) / p;
  }
  return p;
}

void emit_file(const std::string& path, const std::string& content) {
  gcenter::io::atomic_write(resolve_output(path), content);
}

std::string fmt(double v) { return gcenter::io::format_double(v); }

// ------------------------------------------------------------ config file

// Config sections mirror the long option names of their subcommand;
// explicit command-line flags win over file values.
void apply_config(CLI::App* cmd, const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) throw usage_error("cannot open config file " + config_path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw usage_error(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) throw usage_error("config root must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (key == "schema_version") {
      if (!value.is_number_integer() || value.get<int>() != kSchemaVersion)
        throw usage_error("config: unsupported schema_version");
      continue;
    }
    if (key != cmd->get_name()) {
      bool known = false;
      for (const char* name :
           {"solve", "fit", "isotope", "average-tensor", "rates", "spectrum",
            "odmr", "paper-repro"})
        known = known || key == name;
      if (!known) throw usage_error("config: unknown section '" + key + "'");
      continue;  // section for another subcommand
    }
    if (!value.is_object())
      throw usage_error("config: section '" + key + "' must be an object");
    for (const auto& [opt_key, opt_value] : value.items()) {
      CLI::Option* opt = nullptr;
      try {
        opt = cmd->get_option("--" + opt_key);
      } catch (const CLI::OptionNotFound&) {
        throw usage_error("config: unknown key '" + opt_key + "' in section '" +
                          key + "'");
      }
      if (opt->count() > 0) continue;  // explicit flag wins
      std::vector<std::string> values;
      if (opt_value.is_array()) {
        for (const auto& v : opt_value)
          values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      } else if (opt_value.is_string()) {
        values.push_back(opt_value.get<std::string>());
      } else {
        values.push_back(opt_value.dump());
      }
      opt->add_result(values);
      opt->run_callback();
    }
  }
}

// -------------------------------------------------------------- subcommands

struct SolveArgs {
  double length = 22.5;
  double barrier = 33.0;
  int wells = 6;
  int jmax = 64;
  int bands = 2;
  std::string gap_mode = "centroid";
  bool json = false;
  std::string csv_path;
};

int run_solve(const SolveArgs& a) {
  gcenter::rotor::SolveOptions opts;
  opts.jmax = a.jmax;
  opts.n_bands = a.bands;
  if (a.gap_mode == "centroid")
    opts.gap_mode = gcenter::rotor::GapMode::band_centroid;
  else if (a.gap_mode == "lowest")
    opts.gap_mode = gcenter::rotor::GapMode::lowest_gap;
  else
    throw usage_error("solve: gap-mode must be 'centroid' or 'lowest'");

  const gcenter::rotor::RotorPotential pot{a.length, a.barrier, a.wells};
  const gcenter::rotor::BandStructure bs = gcenter::rotor::solve_bands(pot, opts);
  const double harmonic = gcenter::rotor::harmonic_estimate(pot);

  if (!a.csv_path.empty()) {
    std::string csv = gcenter::io::csv_row({"band", "k", "energy_mev",
                                            "degeneracy"});
    for (std::size_t b = 0; b < bs.bands.size(); ++b)
      for (const auto& lv : bs.bands[b])
        csv += gcenter::io::csv_row({std::to_string(b), std::to_string(lv.k),
                                     fmt(lv.energy_mev),
                                     std::to_string(lv.degeneracy)});
    emit_file(a.csv_path, csv);
  }

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["potential"] = {{"length_sqrt_u_angstrom", pot.length},
                        {"barrier_mev", pot.barrier_mev},
                        {"wells", pot.wells}};
    doc["bands"] = ordered_json::array();
    for (std::size_t b = 0; b < bs.bands.size(); ++b) {
      ordered_json band = ordered_json::array();
      for (const auto& lv : bs.bands[b])
        band.push_back({{"k", lv.k},
                        {"energy_mev", lv.energy_mev},
                        {"degeneracy", lv.degeneracy}});
      doc["bands"].push_back(band);
    }
    doc["delta_uev"] = bs.delta_uev;
    doc["total_splitting_uev"] = bs.total_splitting_uev;
    doc["hbar_omega_mev"] = bs.hbar_omega_mev;
    doc["harmonic_estimate_mev"] = harmonic;
    doc["jmax_used"] = bs.jmax_used;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::printf("rotor bands: L=%g sqrt(u)A, V0=%g meV, N=%d (jmax=%d)\n",
              pot.length, pot.barrier_mev, pot.wells, bs.jmax_used);
  std::printf("%-6s %-4s %-16s %s\n", "band", "k", "energy_meV", "degeneracy");
  for (std::size_t b = 0; b < bs.bands.size(); ++b)
    for (const auto& lv : bs.bands[b])
      std::printf("%-6zu %-4d %-16.9f %d\n", b, lv.k, lv.energy_mev,
                  lv.degeneracy);
  std::printf("delta_ueV            %.6g\n", bs.delta_uev);
  std::printf("total_splitting_ueV  %.6g\n", bs.total_splitting_uev);
  std::printf("hbar_omega_meV       %.6g\n", bs.hbar_omega_mev);
  std::printf("harmonic_est_meV     %.6g\n", harmonic);
  return 0;
}

struct FitArgs {
  double target_hw = 12.4;
  double target_delta = 2.5;
  int wells = 6;
  double init_length = 0.0;  // 0: automatic
  double init_barrier = 0.0;
  bool json = false;
};

int run_fit(const FitArgs& a) {
  std::optional<gcenter::rotor::RotorPotential> init;
  if (a.init_length > 0.0 && a.init_barrier > 0.0)
    init = gcenter::rotor::RotorPotential{a.init_length, a.init_barrier,
                                          a.wells};
  const gcenter::rotor::RotorPotential fitted = gcenter::rotor::fit_potential(
      {a.target_hw, a.target_delta}, a.wells, init);
  const gcenter::rotor::BandStructure check =
      gcenter::rotor::solve_bands(fitted, {});

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["targets"] = {{"hbar_omega_mev", a.target_hw},
                      {"delta_uev", a.target_delta}};
    doc["fitted"] = {{"length_sqrt_u_angstrom", fitted.length},
                     {"barrier_mev", fitted.barrier_mev},
                     {"wells", fitted.wells}};
    doc["achieved"] = {{"hbar_omega_mev", check.hbar_omega_mev},
                       {"delta_uev", check.delta_uev}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::printf("fit targets: hbar_omega_meV=%g delta_ueV=%g (N=%d)\n",
              a.target_hw, a.target_delta, a.wells);
  std::printf("fitted length_sqrt_u_A  %.6f\n", fitted.length);
  std::printf("fitted barrier_meV      %.6f\n", fitted.barrier_mev);
  std::printf("achieved hbar_omega_meV %.6f\n", check.hbar_omega_mev);
  std::printf("achieved delta_ueV      %.6f\n", check.delta_uev);
  return 0;
}

struct IsotopeArgs {
  double excited_length = 22.5;
  double excited_barrier = 33.0;
  double ground_length = 31.97;
  double ground_barrier = 89.0;
  int wells = 6;
  std::vector<double> masses = {29.0, 30.0};
  double participation = 0.0;  // 0: calibrate
  double calibrate_shift = 54.0;
  double calibrate_mass = 29.0;
  double reference_mass = 28.0;
  std::string recipe = "excited_only";
  bool json = false;
};

int run_isotope(const IsotopeArgs& a) {
  gcenter::isotope::Recipe recipe;
  if (a.recipe == "excited_only")
    recipe = gcenter::isotope::Recipe::excited_only;
  else if (a.recipe == "both_states")
    recipe = gcenter::isotope::Recipe::both_states;
  else
    throw usage_error("isotope: recipe must be excited_only or both_states");

  const gcenter::rotor::RotorPotential excited{a.excited_length,
                                               a.excited_barrier, a.wells};
  const gcenter::rotor::RotorPotential ground{a.ground_length,
                                              a.ground_barrier, a.wells};

  double f = a.participation;
  bool calibrated = false;
  if (f <= 0.0) {
    f = gcenter::isotope::calibrate_participation(
        excited, ground, recipe, a.calibrate_shift, a.calibrate_mass,
        a.reference_mass);
    calibrated = true;
  }
  const gcenter::isotope::IsotopeScaling scaling{a.reference_mass, f, recipe};

  struct Row {
    double mass;
    double length;
    gcenter::isotope::IsotopeShift shift;
  };
  std::vector<Row> rows;
  for (double m : a.masses) {
    rows.push_back({m, gcenter::isotope::scale_path(excited, scaling, m).length,
                    gcenter::isotope::zpl_isotope_shift(excited, ground,
                                                        scaling, m)});
  }

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["participation_fraction"] = f;
    doc["calibrated"] = calibrated;
    doc["recipe"] = a.recipe;
    doc["shifts"] = ordered_json::array();
    for (const Row& r : rows)
      doc["shifts"].push_back({{"mass_u", r.mass},
                               {"scaled_length_sqrt_u_angstrom", r.length},
                               {"shift_uev", r.shift.magnitude_uev},
                               {"shift_signed_uev", r.shift.signed_uev}});
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::printf("isotope shifts, recipe=%s, f=%.6f%s\n", a.recipe.c_str(), f,
              calibrated ? " (calibrated)" : "");
  std::printf("%-8s %-18s %-14s %s\n", "mass_u", "scaled_L_sqrt_u_A",
              "shift_ueV", "signed_shift_ueV");
  for (const Row& r : rows)
    std::printf("%-8g %-18.6f %-14.4f %.4f\n", r.mass, r.length,
                r.shift.magnitude_uev, r.shift.signed_uev);
  return 0;
}

struct TensorArgs {
  std::vector<double> components;  // xx yy zz xy xz yz
  std::string axis;                // empty: middle eigenvector
  int order = 3;
  bool json = false;
};

Eigen::Vector3d parse_vec3(const std::string& csv) {
  std::istringstream is(csv);
  Eigen::Vector3d v;
  char sep1 = 0, sep2 = 0;
  if (!(is >> v(0) >> sep1 >> v(1) >> sep2 >> v(2)) || sep1 != ',' ||
      sep2 != ',')
    throw usage_error("expected a comma-separated 3-vector, got '" + csv + "'");
  return v;
}

int run_average_tensor(const TensorArgs& a) {
  if (a.components.size() != 6)
    throw usage_error(
        "average-tensor: --tensor needs 6 values (xx yy zz xy xz yz)");
  const gcenter::tensor::SymTensor3 t{a.components[0], a.components[1],
                                      a.components[2], a.components[3],
                                      a.components[4], a.components[5]};
  const Eigen::Vector3d axis = a.axis.empty()
                                   ? gcenter::tensor::middle_eigenvector(t)
                                   : parse_vec3(a.axis).normalized();
  const auto frame = gcenter::tensor::AxisFrame::about(axis, a.order);
  const gcenter::tensor::SymTensor3 avg =
      gcenter::tensor::average_over_rotations(t, frame);

  const auto split = gcenter::tensor::remove_isotropic(avg);
  const auto axial = gcenter::tensor::axial_parameters(split.traceless, axis);

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["axis"] = {axis(0), axis(1), axis(2)};
    doc["rotation_order"] = a.order;
    doc["averaged_mhz"] = {{"xx", avg.xx}, {"yy", avg.yy}, {"zz", avg.zz},
                           {"xy", avg.xy}, {"xz", avg.xz}, {"yz", avg.yz}};
    doc["isotropic_mhz"] = split.iso_mhz;
    doc["d_mhz"] = axial.d_mhz;
    doc["e_mhz"] = axial.e_mhz;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::printf("averaging axis          %.6f, %.6f, %.6f (order %d)\n", axis(0),
              axis(1), axis(2), a.order);
  std::printf("averaged tensor_MHz     xx=%.4f yy=%.4f zz=%.4f\n", avg.xx,
              avg.yy, avg.zz);
  std::printf("                        xy=%.4f xz=%.4f yz=%.4f\n", avg.xy,
              avg.xz, avg.yz);
  std::printf("isotropic_MHz           %.4f\n", split.iso_mhz);
  std::printf("D_MHz                   %.4f\n", axial.d_mhz);
  std::printf("E_MHz                   %.4g\n", axial.e_mhz);
  return 0;
}

struct RatesArgs {
  double delta = 0.22;
  double alpha = 0.0;
  double beta = -1.0;  // <0: calibrate
  double t_cross = 5.0;
  double probe_ghz = 35.0;
  std::vector<double> temperatures = {1.7, 5.0, 6.0, 30.0};
  bool json = false;
};

int run_rates(const RatesArgs& a) {
  gcenter::rates::RateParams p{a.delta, a.alpha, 0.0};
  bool calibrated = false;
  if (a.beta >= 0.0) {
    p.beta_hz_per_k5 = a.beta;
  } else {
    p.beta_hz_per_k5 =
        gcenter::rates::calibrate_beta(p, a.t_cross, a.probe_ghz * 1e9);
    calibrated = true;
  }

  struct Row {
    double t;
    double gamma_hz;
    gcenter::rates::RegimeReport regime;
  };
  std::vector<Row> rows;
  for (double t : a.temperatures)
    rows.push_back({t, gcenter::rates::gamma(p, t),
                    gcenter::rates::classify_regime(
                        p, {a.probe_ghz * 1e9, t})});

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["delta_uev"] = p.delta_uev;
    doc["alpha_hz_per_k"] = p.alpha_hz_per_k;
    doc["beta_hz_per_k5"] = p.beta_hz_per_k5;
    doc["beta_calibrated"] = calibrated;
    doc["gamma0_ghz"] = gcenter::rates::gamma0(p) * 1e-9;
    doc["probe_ghz"] = a.probe_ghz;
    doc["table"] = ordered_json::array();
    for (const Row& r : rows)
      doc["table"].push_back(
          {{"temperature_k", r.t},
           {"gamma_ghz", r.gamma_hz * 1e-9},
           {"regime", r.regime.regime ==
                              gcenter::rates::Regime::motionally_averaged
                          ? "motionally_averaged"
                          : "static_low_symmetry"},
           {"margin_ratio", r.regime.margin_ratio}});
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::printf("rates: delta_ueV=%g alpha_Hz_per_K=%g beta_Hz_per_K5=%.6g%s\n",
              p.delta_uev, p.alpha_hz_per_k, p.beta_hz_per_k5,
              calibrated ? " (calibrated)" : "");
  std::printf("Gamma0_GHz = %.6f, probe_GHz = %g\n",
              gcenter::rates::gamma0(p) * 1e-9, a.probe_ghz);
  std::printf("%-8s %-14s %-22s %s\n", "T_K", "Gamma_GHz", "regime",
              "margin_ratio");
  for (const Row& r : rows)
    std::printf("%-8g %-14.6g %-22s %.6g\n", r.t, r.gamma_hz * 1e-9,
                r.regime.regime ==
                        gcenter::rates::Regime::motionally_averaged
                    ? "motionally_averaged"
                    : "static_low_symmetry",
                r.regime.margin_ratio);
  return 0;
}

struct SpectrumArgs {
  double length = 22.5;
  double barrier = 33.0;
  int wells = 6;
  double temperature = 1.4;
  double zpl_ev = 0.97;
  std::string weighting = "emission";
  double w0 = 0.1;
  double wa = -1.0;  // <0: calibrate so w(20 K) = 12 ueV
  double activation = 12.4;
  std::string shape = "gaussian";
  double grid_min = 0.0, grid_max = 0.0, grid_step = 0.0;  // 0: automatic
  std::string csv_path;
  std::string lines_csv_path;
  bool json = false;
};

int run_spectrum(const SpectrumArgs& a) {
  using namespace gcenter::spectrum;
  const gcenter::rotor::RotorPotential pot{a.length, a.barrier, a.wells};
  const gcenter::rotor::BandStructure bs = gcenter::rotor::solve_bands(pot, {});

  Weighting weighting;
  if (a.weighting == "emission")
    weighting = Weighting::emission;
  else if (a.weighting == "absorption")
    weighting = Weighting::absorption;
  else
    throw usage_error("spectrum: weighting must be emission or absorption");

  const LineList lines =
      fine_structure_lines(bs, a.temperature, a.zpl_ev, weighting);

  LineShape shape;
  if (a.shape == "gaussian")
    shape = LineShape::gaussian;
  else if (a.shape == "lorentzian")
    shape = LineShape::lorentzian;
  else
    throw usage_error("spectrum: shape must be gaussian or lorentzian");

  BroadeningModel model{a.w0, a.wa, a.activation, shape};
  if (a.wa < 0.0)
    model = BroadeningModel::calibrated(a.w0, a.activation, 20.0, 12.0, shape);

  const double w = model.width_uev(a.temperature);
  const double span = lines.lines.back().offset_uev;
  EnergyGrid grid{a.grid_min, a.grid_max, a.grid_step};
  if (grid.step_uev <= 0.0 || grid.max_uev <= grid.min_uev) {
    grid.min_uev = -6.0 * w - 0.1 * span;
    grid.max_uev = span + 6.0 * w + 0.1 * span;
    grid.step_uev = std::min(w / 8.0, span / 64.0);
  }
  const SampledSpectrum sampled = broaden(lines, model, a.temperature, grid);

  if (!a.lines_csv_path.empty()) {
    std::string csv = gcenter::io::csv_row({"energy_uev_offset", "intensity"});
    for (const Line& line : lines.lines)
      csv += gcenter::io::csv_row({fmt(line.offset_uev), fmt(line.intensity)});
    emit_file(a.lines_csv_path, csv);
  }
  if (!a.csv_path.empty()) {
    std::string csv = gcenter::io::csv_row({"energy_uev_offset", "intensity"});
    for (std::size_t i = 0; i < sampled.offset_uev.size(); ++i)
      csv += gcenter::io::csv_row(
          {fmt(sampled.offset_uev[i]), fmt(sampled.intensity_per_uev[i])});
    emit_file(a.csv_path, csv);
  }

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["zpl_energy_ev"] = lines.zpl_energy_ev;
    doc["temperature_k"] = a.temperature;
    doc["width_uev"] = w;
    doc["local_maxima"] = count_local_maxima(sampled);
    doc["lines"] = ordered_json::array();
    for (const Line& line : lines.lines)
      doc["lines"].push_back({{"energy_uev_offset", line.offset_uev},
                              {"degeneracy", line.degeneracy},
                              {"intensity", line.intensity},
                              {"sector_k", line.sector_k}});
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::printf("fine structure at T=%g K (zpl %.4f eV, width %.4g ueV, %s)\n",
              a.temperature, lines.zpl_energy_ev, w, a.weighting.c_str());
  std::printf("%-18s %-12s %-12s %s\n", "energy_ueV_offset", "degeneracy",
              "intensity", "sector_k");
  for (const Line& line : lines.lines)
    std::printf("%-18.6f %-12d %-12.6f %d\n", line.offset_uev, line.degeneracy,
                line.intensity, line.sector_k);
  std::printf("sampled points %zu, local maxima %d\n",
              sampled.offset_uev.size(), count_local_maxima(sampled));
  return 0;
}

struct OdmrArgs {
  std::vector<double> d_components;  // xx yy zz xy xz yz; empty: reference set
  double g = gcenter::default_defect_g;
  std::string direction = "0,1,1";
  double probe_ghz = 35.0;
  double b_max = 2.0;
  std::string orientations = "cubic";
  bool averaged = false;
  std::string axis;
  int order = 3;
  int prescan = 2000;
  bool double_quantum = false;
  std::string csv_path;
  bool json = false;
};

int run_odmr(const OdmrArgs& a) {
  using namespace gcenter::spin;
  TripletSpinSystem sys;
  if (a.d_components.empty()) {
    sys.d_mhz = gcenter::refdata::zfs_calculated();
  } else if (a.d_components.size() == 6) {
    sys.d_mhz = {a.d_components[0], a.d_components[1], a.d_components[2],
                 a.d_components[3], a.d_components[4], a.d_components[5]};
  } else {
    throw usage_error("odmr: --D needs 6 values (xx yy zz xy xz yz)");
  }
  sys.g = a.g;

  if (a.averaged) {
    const Eigen::Vector3d axis =
        a.axis.empty() ? gcenter::tensor::middle_eigenvector(sys.d_mhz)
                       : parse_vec3(a.axis).normalized();
    sys = motional_average(sys, gcenter::tensor::AxisFrame::about(axis, a.order));
  }

  std::vector<TripletSpinSystem> orientations;
  if (a.orientations == "cubic")
    orientations = cubic_orientations(sys);
  else if (a.orientations == "identity")
    orientations = {sys};
  else
    throw usage_error("odmr: orientations must be 'cubic' or 'identity'");

  ResonanceSearch search;
  search.prescan_points = a.prescan;
  search.include_double_quantum = a.double_quantum;
  const Eigen::Vector3d direction = parse_vec3(a.direction);
  const std::vector<Branch> branches = orientation_branches(
      orientations, direction, a.probe_ghz, a.b_max, search);

  auto transition_name = [](const Branch& b) {
    return std::to_string(b.lower) + "-" + std::to_string(b.upper);
  };

  if (!a.csv_path.empty()) {
    std::string csv = gcenter::io::csv_row(
        {"orientation_id", "B_tesla", "transition", "multiplicity"});
    for (const Branch& b : branches)
      csv += gcenter::io::csv_row({std::to_string(b.orientation_id),
                                   fmt(b.b_tesla), transition_name(b),
                                   std::to_string(b.multiplicity)});
    emit_file(a.csv_path, csv);
  }

  if (a.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["probe_ghz"] = a.probe_ghz;
    doc["direction"] = {direction(0), direction(1), direction(2)};
    doc["orientation_count"] = orientations.size();
    doc["branches"] = ordered_json::array();
    for (const Branch& b : branches)
      doc["branches"].push_back({{"orientation_id", b.orientation_id},
                                 {"B_tesla", b.b_tesla},
                                 {"transition", transition_name(b)},
                                 {"multiplicity", b.multiplicity}});
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::printf(
      "ODMR resonances: probe %g GHz, B || (%s), %zu orientation(s)\n",
      a.probe_ghz, a.direction.c_str(), orientations.size());
  std::printf("%-16s %-14s %-12s %s\n", "orientation_id", "B_tesla",
              "transition", "multiplicity");
  for (const Branch& b : branches)
    std::printf("%-16d %-14.6f %-12s %d\n", b.orientation_id, b.b_tesla,
                transition_name(b).c_str(), b.multiplicity);
  return 0;
}

int run_paper_repro(bool json) {
  const std::vector<gcenter::report::Check> checks =
      gcenter::report::reproduction_checks();
  std::cout << (json ? gcenter::report::render_json(checks)
                     : gcenter::report::render_text(checks));
  for (const auto& c : checks)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "G-center model kit: hindered-rotor tunneling spectra, isotope "
      "shifts, reorientation rates, motional tensor averaging and triplet "
      "spin resonance"};
  app.require_subcommand(1);

  std::string config_path;

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Rotational band structure of the periodic well");
  solve->add_option("--L", solve_args.length,
                    "path circumference, sqrt(u) Angstrom");
  solve->add_option("--V0", solve_args.barrier, "barrier height, meV");
  solve->add_option("--N", solve_args.wells, "number of wells");
  solve->add_option("--jmax", solve_args.jmax, "starting basis half-width");
  solve->add_option("--bands", solve_args.bands, "bands to report");
  solve->add_option("--gap-mode", solve_args.gap_mode,
                    "'centroid' or 'lowest'");
  solve->add_flag("--json", solve_args.json, "emit JSON to stdout");
  solve->add_option("--csv", solve_args.csv_path, "write level table CSV");

  FitArgs fit_args;
  CLI::App* fit =
      app.add_subcommand("fit", "Fit (L, V0) to a band gap and splitting");
  fit->add_option("--target-hw", fit_args.target_hw, "target gap, meV");
  fit->add_option("--target-delta", fit_args.target_delta,
                  "target splitting, ueV");
  fit->add_option("--N", fit_args.wells, "number of wells");
  fit->add_option("--init-L", fit_args.init_length, "initial length");
  fit->add_option("--init-V0", fit_args.init_barrier, "initial barrier");
  fit->add_flag("--json", fit_args.json, "emit JSON to stdout");

  IsotopeArgs iso_args;
  CLI::App* iso = app.add_subcommand(
      "isotope", "Isotope shift of the fine-structure lines");
  iso->add_option("--excited-L", iso_args.excited_length, "excited-state L");
  iso->add_option("--excited-V0", iso_args.excited_barrier, "excited-state V0");
  iso->add_option("--ground-L", iso_args.ground_length, "ground-state L");
  iso->add_option("--ground-V0", iso_args.ground_barrier, "ground-state V0");
  iso->add_option("--N", iso_args.wells, "number of wells");
  iso->add_option("--mass", iso_args.masses, "isotope masses, u");
  iso->add_option("--f", iso_args.participation,
                  "participation fraction; omit to calibrate");
  iso->add_option("--calibrate-shift", iso_args.calibrate_shift,
                  "calibration target shift, ueV");
  iso->add_option("--calibrate-mass", iso_args.calibrate_mass,
                  "calibration mass, u");
  iso->add_option("--reference-mass", iso_args.reference_mass,
                  "reference isotope mass, u");
  iso->add_option("--recipe", iso_args.recipe,
                  "excited_only or both_states");
  iso->add_flag("--json", iso_args.json, "emit JSON to stdout");

  TensorArgs tensor_args;
  CLI::App* avg = app.add_subcommand("average-tensor",
                                     "Motional average of a 3x3 tensor");
  avg->add_option("--tensor", tensor_args.components,
                  "six components: xx yy zz xy xz yz (MHz)")
      ->expected(6);
  avg->add_option("--axis", tensor_args.axis,
                  "rotation axis 'x,y,z'; default: middle eigenvector");
  avg->add_option("--order", tensor_args.order, "rotation order");
  avg->add_flag("--json", tensor_args.json, "emit JSON to stdout");

  RatesArgs rates_args;
  CLI::App* rates =
      app.add_subcommand("rates", "Reorientation rate vs temperature");
  rates->add_option("--delta", rates_args.delta, "tunneling splitting, ueV");
  rates->add_option("--alpha", rates_args.alpha, "direct coefficient, Hz/K");
  rates->add_option("--beta", rates_args.beta,
                    "Raman coefficient, Hz/K^5; omit to calibrate");
  rates->add_option("--t-cross", rates_args.t_cross,
                    "calibration crossing temperature, K");
  rates->add_option("--probe-ghz", rates_args.probe_ghz,
                    "interrogation frequency, GHz");
  rates->add_option("--T", rates_args.temperatures, "temperatures to tabulate");
  rates->add_flag("--json", rates_args.json, "emit JSON to stdout");

  SpectrumArgs spec_args;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Fine-structure line list and broadened spectrum");
  spectrum->add_option("--L", spec_args.length, "excited-state L");
  spectrum->add_option("--V0", spec_args.barrier, "excited-state V0");
  spectrum->add_option("--N", spec_args.wells, "number of wells");
  spectrum->add_option("--T", spec_args.temperature, "temperature, K");
  spectrum->add_option("--zpl-ev", spec_args.zpl_ev, "line anchor, eV");
  spectrum->add_option("--weighting", spec_args.weighting,
                       "emission or absorption");
  spectrum->add_option("--w0", spec_args.w0, "residual width (FWHM), ueV");
  spectrum->add_option("--wa", spec_args.wa,
                       "Arrhenius prefactor, ueV; omit to calibrate");
  spectrum->add_option("--Ea", spec_args.activation, "activation energy, meV");
  spectrum->add_option("--shape", spec_args.shape, "gaussian or lorentzian");
  spectrum->add_option("--grid-min", spec_args.grid_min, "grid start, ueV");
  spectrum->add_option("--grid-max", spec_args.grid_max, "grid end, ueV");
  spectrum->add_option("--grid-step", spec_args.grid_step, "grid step, ueV");
  spectrum->add_option("--csv", spec_args.csv_path,
                       "write sampled spectrum CSV");
  spectrum->add_option("--lines-csv", spec_args.lines_csv_path,
                       "write line list CSV");
  spectrum->add_flag("--json", spec_args.json, "emit JSON to stdout");

  OdmrArgs odmr_args;
  CLI::App* odmr =
      app.add_subcommand("odmr", "Triplet resonance fields and branches");
  odmr->add_option("--D", odmr_args.d_components,
                   "ZFS tensor: xx yy zz xy xz yz (MHz)")
      ->expected(6);
  odmr->add_option("--g", odmr_args.g, "isotropic g factor");
  odmr->add_option("--direction", odmr_args.direction, "field direction");
  odmr->add_option("--probe-ghz", odmr_args.probe_ghz, "probe, GHz");
  odmr->add_option("--Bmax", odmr_args.b_max, "field scan limit, T");
  odmr->add_option("--orientations", odmr_args.orientations,
                   "'cubic' or 'identity'");
  odmr->add_flag("--averaged", odmr_args.averaged,
                 "motionally average the tensors first");
  odmr->add_option("--axis", odmr_args.axis, "averaging axis 'x,y,z'");
  odmr->add_option("--order", odmr_args.order, "averaging rotation order");
  odmr->add_option("--prescan", odmr_args.prescan, "field pre-scan points");
  odmr->add_flag("--double-quantum", odmr_args.double_quantum,
                 "include the 0-2 gap");
  odmr->add_option("--csv", odmr_args.csv_path, "write resonance table CSV");
  odmr->add_flag("--json", odmr_args.json, "emit JSON to stdout");

  bool repro_json = false;
  CLI::App* repro = app.add_subcommand(
      "paper-repro",
      "Recompute the published G-center quantities and report pass/fail");
  repro->add_flag("--json", repro_json, "emit JSON to stdout");

  for (CLI::App* cmd : {solve, fit, iso, avg, rates, spectrum, odmr, repro})
    cmd->add_option("--config", config_path, "JSON config file");

  try {
    app.parse(argc, argv);
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(active, config_path);

    if (active == solve) return run_solve(solve_args);
    if (active == fit) return run_fit(fit_args);
    if (active == iso) return run_isotope(iso_args);
    if (active == avg) return run_average_tensor(tensor_args);
    if (active == rates) return run_rates(rates_args);
    if (active == spectrum) return run_spectrum(spec_args);
    if (active == odmr) return run_odmr(odmr_args);
    if (active == repro) return run_paper_repro(repro_json);
    throw usage_error("no subcommand selected");
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gcenter::compute_error& e) {
    std::cerr << "compute error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
