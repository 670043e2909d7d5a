#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "umbilic/cli/job.hpp"

namespace umbilic::cli {

enum class OutputFormat { kJson, kCsv };

struct Options {
  std::string command;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  bool witness = false;
  OutputFormat format = OutputFormat::kJson;
  /// Relative perturbation added to the isometries checked by selftest.
  double perturb = 0.0;
};

struct CommandResult {
  int exit_code = 0;
  std::string body;  ///< JSON or CSV, newline-terminated
};

/// Runs one command on the text of a job document. Never throws: errors are
/// turned into {"error": {"code", "message"}} with exit code 2 (input or
/// domain), 3 (mathematical precondition) or 1 (internal fault).
CommandResult execute(const Options& opts, const std::string& document,
                      const char* env_tol);

}  // namespace umbilic::cli
