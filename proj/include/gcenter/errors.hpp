#pragma once

#include <stdexcept>
#include <string>

namespace gcenter {

// Caller passed something outside a contract (bad unit token, invalid
// potential, grid that misses the lines, ...).  CLI maps this to exit 2.
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine failed to deliver (non-convergence, non-finite
// input, basis escalation hit its cap).  CLI maps this to exit 1.
class compute_error : public std::runtime_error {
 public:
  explicit compute_error(const std::string& what) : std::runtime_error(what) {}
};

// No sign change over the supplied interval.
class bracketing_error : public compute_error {
 public:
  explicit bracketing_error(const std::string& what) : compute_error(what) {}
};

// Newton iteration diverged or ran out of its iteration budget.  Carries
// the best iterate seen so the caller can report it.
class fit_error : public compute_error {
 public:
  fit_error(const std::string& what, double best_x, double best_y,
            double best_residual)
      : compute_error(what),
        best_x_(best_x),
        best_y_(best_y),
        best_residual_(best_residual) {}

  double best_x() const { return best_x_; }
  double best_y() const { return best_y_; }
  double best_residual() const { return best_residual_; }

 private:
  double best_x_;
  double best_y_;
  double best_residual_;
};

// Requested calibration target is not reachable within the allowed
// parameter range.
class calibration_error : public compute_error {
 public:
  explicit calibration_error(const std::string& what) : compute_error(what) {}
};

}  // namespace gcenter
