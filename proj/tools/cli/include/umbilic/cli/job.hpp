#pragma once

// The JSON job document shared by every command.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "umbilic/lightcone.hpp"

namespace umbilic::cli {

/// Schema violations in the document itself (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedObject {
  std::string name;
  std::vector<RoundObject> generators;
};

struct JobDocument {
  int n = 0;
  int k = 0;
  std::optional<double> tolerance;
  std::vector<NamedObject> objects;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
};

/// Parses and schema-checks a document. Hyperplane normals are rescaled to
/// unit length together with their offsets; radii are passed through so that
/// the library reports invalid ones.
JobDocument parse_job(const nlohmann::json& doc);
JobDocument parse_job_text(const std::string& text);

/// --tol, then the document, then UMBILIC_TOL, then the library default.
double resolve_tolerance(std::optional<double> flag, const JobDocument& doc,
                         const char* env_value);

nlohmann::json to_json(const RoundObject& obj);
nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const Eigen::MatrixXd& m);

}  // namespace umbilic::cli
