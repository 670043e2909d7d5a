#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

namespace umbilic::cli {

struct SelftestConfig {
  std::uint64_t seed = 0;
  int trials = 100;
  /// Size of the entry added to every isometry before it is checked. Any
  /// value near 1e-3 must turn the isometry suite red.
  double perturb = 0.0;
  double tol = 1e-9;
};

/// Runs the oracle suites and returns the report. The report holds counts
/// and residuals only, so equal configs give byte-identical dumps.
nlohmann::json selftest_report(const SelftestConfig& cfg);

}  // namespace umbilic::cli
