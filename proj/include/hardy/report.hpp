#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hardy {

/// Outcome of one check. `passed` holds exactly when worst_violation <=
/// tolerance; a NaN violation fails.
struct VerificationReport {
  std::string check_name;
  std::size_t samples = 0;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::string> details;
};

inline VerificationReport make_report(std::string name, std::size_t samples, double worst,
                                      double tolerance, std::vector<std::string> details = {}) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.samples = samples;
  r.worst_violation = worst;
  r.tolerance = tolerance;
  r.passed = worst <= tolerance;
  r.details = std::move(details);
  return r;
}

}  // namespace hardy
