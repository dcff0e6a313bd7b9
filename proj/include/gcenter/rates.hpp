#pragma once

namespace gcenter::rates {

// Reorientation rate Gamma(T) = 6 delta / h + alpha T + beta T^5.
// alpha and beta are opaque electron-phonon coefficients supplied by the
// caller (or calibrated against an observed crossing temperature).
struct RateParams {
  double delta_uev;        // tunneling splitting of the state in question
  double alpha_hz_per_k = 0.0;   // one-phonon (direct) coefficient
  double beta_hz_per_k5 = 0.0;   // two-phonon (Raman) coefficient

  void validate() const;
};

struct ProbeContext {
  double interrogation_frequency_hz;  // e.g. 35 GHz microwave
  double temperature_k;

  void validate() const;
};

// Athermal rate 6 delta / h, in Hz.
double gamma0(const RateParams& p);

// Total rate at temperature T, in Hz.
double gamma(const RateParams& p, double temperature_k);

// beta such that gamma crosses `probe_hz` exactly at t_cross_k.
// Throws calibration_error when the probe is below the athermal +
// direct rate at t_cross_k.
double calibrate_beta(const RateParams& p_without_beta, double t_cross_k,
                      double probe_hz);

enum class Regime { static_low_symmetry, motionally_averaged };

struct RegimeReport {
  Regime regime;
  double margin_ratio;  // gamma / interrogation frequency
};

// Motionally averaged once the reorientation rate reaches the
// interrogation frequency (averaging wins at equality).
RegimeReport classify_regime(const RateParams& p, const ProbeContext& probe);

// Temperature where gamma(T) = probe_hz, bracketed on [0, t_hi_k].
double crossing_temperature(const RateParams& p, double probe_hz,
                            double t_hi_k = 100.0);

}  // namespace gcenter::rates
