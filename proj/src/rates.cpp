#include "gcenter/rates.hpp"

#include <cmath>
#include <sstream>

#include "gcenter/errors.hpp"
#include "gcenter/numerics.hpp"
#include "gcenter/units.hpp"

namespace gcenter::rates {

void RateParams::validate() const {
  if (!(delta_uev > 0.0))
    throw usage_error("rates: tunneling splitting must be positive");
  if (alpha_hz_per_k < 0.0 || beta_hz_per_k5 < 0.0)
    throw usage_error("rates: phonon coefficients must be non-negative");
}

void ProbeContext::validate() const {
  if (!(interrogation_frequency_hz > 0.0))
    throw usage_error("rates: interrogation frequency must be positive");
  if (!(temperature_k > 0.0))
    throw usage_error("rates: probe temperature must be positive");
}

double gamma0(const RateParams& p) {
  p.validate();
  // 6 delta / h; planck_h is ueV per GHz, so delta/planck_h is in GHz.
  return 6.0 * p.delta_uev / constants.planck_h * 1e9;
}

double gamma(const RateParams& p, double temperature_k) {
  p.validate();
  if (temperature_k < 0.0)
    throw usage_error("rates: temperature must be non-negative");
  const double t = temperature_k;
  return gamma0(p) + p.alpha_hz_per_k * t +
         p.beta_hz_per_k5 * t * t * t * t * t;
}

double calibrate_beta(const RateParams& p_without_beta, double t_cross_k,
                      double probe_hz) {
  RateParams p = p_without_beta;
  p.beta_hz_per_k5 = 0.0;
  p.validate();
  if (!(t_cross_k > 0.0))
    throw usage_error("rates: crossing temperature must be positive");

  if (gamma0(p) >= probe_hz) {
    std::ostringstream os;
    os << "rates: athermal rate " << gamma0(p) << " Hz already reaches the "
       << probe_hz << " Hz probe; there is no crossing to calibrate";
    throw calibration_error(os.str());
  }
  const double diff = probe_hz - gamma(p, t_cross_k);
  // exact saturation by the direct term calibrates to beta = 0
  if (diff < -1e-12 * probe_hz) {
    std::ostringstream os;
    os << "rates: probe " << probe_hz
       << " Hz is below the athermal+direct rate " << gamma(p, t_cross_k)
       << " Hz at " << t_cross_k << " K; no Raman coefficient can cross it";
    throw calibration_error(os.str());
  }
  return std::max(diff, 0.0) / std::pow(t_cross_k, 5);
}

RegimeReport classify_regime(const RateParams& p, const ProbeContext& probe) {
  probe.validate();
  const double rate = gamma(p, probe.temperature_k);
  const double ratio = rate / probe.interrogation_frequency_hz;
  return {ratio >= 1.0 ? Regime::motionally_averaged
                       : Regime::static_low_symmetry,
          ratio};
}

double crossing_temperature(const RateParams& p, double probe_hz,
                            double t_hi_k) {
  p.validate();
  if (!(probe_hz > 0.0)) throw usage_error("rates: probe must be positive");
  return find_root([&](double t) { return gamma(p, t) - probe_hz; }, 0.0,
                   t_hi_k);
}

}  // namespace gcenter::rates
