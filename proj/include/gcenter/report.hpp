#pragma once

#include <string>
#include <vector>

namespace gcenter::report {

struct Check {
  std::string name;
  double computed;
  std::string unit;
  std::string target;  // acceptance window, human readable
  bool pass;
};

// Recomputes the headline G-center quantities and compares each against
// its published target window.  Deterministic order and values.
std::vector<Check> reproduction_checks();

// Fixed-format text rendering (one PASS/FAIL line per check).
std::string render_text(const std::vector<Check>& checks);

// Machine-readable rendering with a schema_version field.
std::string render_json(const std::vector<Check>& checks);

}  // namespace gcenter::report
