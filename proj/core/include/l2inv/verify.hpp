#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace l2inv {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  /// First failing case, rendered small enough to paste into a regression.
  std::string repro;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool ok() const;
};

/// Runs one named property suite (algebra, dimension, betti, approximation,
/// atiyah, alpha) or all of them.  Fixed seed -> fixed cases -> fixed output.
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed, int jobs);

}  // namespace l2inv
