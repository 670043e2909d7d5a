#include "umbilic/cli/job.hpp"

#include <cmath>
#include <cstdlib>

namespace umbilic::cli {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(where + ": expected a finite number");
  return x;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

EVec vector(const json& j, int len, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (static_cast<int>(j.size()) != len) {
    throw InputError(where + ": expected " + std::to_string(len) +
                     " entries, got " + std::to_string(j.size()));
  }
  EVec x(len);
  for (int i = 0; i < len; ++i) {
    x(i) = number(j[static_cast<std::size_t>(i)], where);
  }
  return x;
}

RoundObject round_object(const json& j, int len, const std::string& where) {
  const json& type = require(j, "type", where);
  if (!type.is_string()) throw InputError(where + ": \"type\" must be a string");
  const auto t = type.get<std::string>();
  if (t == "sphere") {
    return Sphere{vector(require(j, "center", where), len, where + ".center"),
                  number(require(j, "radius", where), where + ".radius")};
  }
  if (t == "hyperplane") {
    EVec normal = vector(require(j, "normal", where), len, where + ".normal");
    double offset = number(require(j, "offset", where), where + ".offset");
    const double s = normal.norm();
    if (s == 0.0) throw InputError(where + ".normal: must be nonzero");
    return Hyperplane{normal / s, offset / s};
  }
  throw InputError(where + ": unknown type \"" + t + "\"");
}

}  // namespace

JobDocument parse_job(const json& doc) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  JobDocument out;
  const json& ctx = require(doc, "context", "document");
  out.n = integer(require(ctx, "n", "context"), "context.n");
  out.k = integer(require(ctx, "k", "context"), "context.k");
  if (out.n < 2 || out.k < 1 || out.k > out.n + 1) {
    throw InputError("context: need n >= 2 and 1 <= k <= n+1");
  }
  if (doc.contains("tolerance")) {
    const double t = number(doc["tolerance"], "tolerance");
    if (t <= 0) throw InputError("tolerance: must be positive");
    out.tolerance = t;
  }
  if (doc.contains("samples")) out.samples = integer(doc["samples"], "samples");
  if (doc.contains("trials")) out.trials = integer(doc["trials"], "trials");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw InputError("seed: expected a non-negative integer");
    }
    out.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("objects")) {
    const json& objs = doc["objects"];
    if (!objs.is_array()) throw InputError("objects: expected an array");
    const int len = out.n + 1;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const json& o = objs[i];
      const std::string where = "objects[" + std::to_string(i) + "]";
      NamedObject named;
      named.name = std::to_string(i);
      if (o.is_object() && o.contains("name")) {
        if (!o["name"].is_string()) throw InputError(where + ".name: expected a string");
        named.name = o["name"].get<std::string>();
      }
      if (o.is_object() && o.contains("generators")) {
        const json& gens = o["generators"];
        if (!gens.is_array() || gens.empty()) {
          throw InputError(where + ".generators: expected a non-empty array");
        }
        for (std::size_t g = 0; g < gens.size(); ++g) {
          named.generators.push_back(round_object(
              gens[g], len, where + ".generators[" + std::to_string(g) + "]"));
        }
      } else {
        named.generators.push_back(round_object(o, len, where));
      }
      out.objects.push_back(std::move(named));
    }
  }
  return out;
}

JobDocument parse_job_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_job(doc);
}

double resolve_tolerance(std::optional<double> flag, const JobDocument& doc,
                         const char* env_value) {
  if (flag) return *flag;
  if (doc.tolerance) return *doc.tolerance;
  if (env_value != nullptr && *env_value != '\0') {
    char* end = nullptr;
    const double t = std::strtod(env_value, &end);
    if (end == env_value || *end != '\0' || !(t > 0) || !std::isfinite(t)) {
      throw InputError("UMBILIC_TOL: expected a positive number");
    }
    return t;
  }
  return kDefaultTol;
}

json to_json(const RoundObject& obj) {
  if (const auto* s = std::get_if<Sphere>(&obj)) {
    return {{"type", "sphere"}, {"center", to_json(s->center)}, {"radius", s->radius}};
  }
  const auto& h = std::get<Hyperplane>(obj);
  return {{"type", "hyperplane"}, {"normal", to_json(h.normal)}, {"offset", h.offset}};
}

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

json to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace umbilic::cli
