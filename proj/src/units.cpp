#include "gcenter/units.hpp"

#include <string>

#include "gcenter/errors.hpp"

namespace gcenter {

namespace {

// meV per unit of each energy token.
double mev_per(Unit u) {
  switch (u) {
    case Unit::mev:
      return 1.0;
    case Unit::uev:
      return 1e-3;
    case Unit::ghz:
      return constants.planck_h * 1e-3;  // ueV/GHz -> meV/GHz
    case Unit::mhz:
      return constants.planck_h * 1e-6;
    case Unit::kelvin:
      return constants.boltzmann_kB;
    case Unit::millikelvin:
      return constants.boltzmann_kB * 1e-3;
  }
  throw usage_error("unknown unit enumerator");
}

}  // namespace

Unit parse_unit(std::string_view token) {
  if (token == "meV") return Unit::mev;
  if (token == "ueV" || token == "µeV" || token == "μeV") return Unit::uev;
  if (token == "GHz") return Unit::ghz;
  if (token == "MHz") return Unit::mhz;
  if (token == "K") return Unit::kelvin;
  if (token == "mK") return Unit::millikelvin;
  throw usage_error("unknown unit token '" + std::string(token) +
                    "' (expected meV, ueV, GHz, MHz, K or mK)");
}

const char* unit_name(Unit u) {
  switch (u) {
    case Unit::mev:
      return "meV";
    case Unit::uev:
      return "ueV";
    case Unit::ghz:
      return "GHz";
    case Unit::mhz:
      return "MHz";
    case Unit::kelvin:
      return "K";
    case Unit::millikelvin:
      return "mK";
  }
  return "?";
}

double convert_energy(double value, Unit from, Unit to) {
  if (from == to) return value;
  return value * (mev_per(from) / mev_per(to));
}

}  // namespace gcenter
