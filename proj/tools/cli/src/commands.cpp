#include "umbilic/cli/commands.hpp"

#include <cstdio>

#include "umbilic/canonical.hpp"
#include "umbilic/cli/selftest.hpp"
#include "umbilic/congruence.hpp"
#include "umbilic/error.hpp"
#include "umbilic/rotational.hpp"
#include "umbilic/topology.hpp"

namespace umbilic::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultSamples = 64;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CommandResult error_result(int code, const std::string& name,
                           const std::string& message) {
  json j = {{"error", {{"code", name}, {"message", message}}}};
  return {code, dump(j)};
}

json invariant_json(const CongruenceInvariant& inv) {
  return {{"perp_eigs", inv.perp_eigs},
          {"tangential_rank", inv.tangential_rank},
          {"tangential_degenerate", inv.tangential_degenerate}};
}

json spec_json(const UmbilicalSpec& spec) {
  json out = json::array();
  for (const auto& g : spec.generators) out.push_back(to_json(g));
  return out;
}

Matrix rows_of(const std::vector<LVec>& vs) {
  Matrix m(static_cast<Eigen::Index>(vs.size()), vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  }
  return m;
}

const NamedObject& only_object(const JobDocument& doc, const char* cmd) {
  if (doc.objects.size() != 1) {
    throw InputError(std::string(cmd) + " expects exactly one object, got " +
                     std::to_string(doc.objects.size()));
  }
  return doc.objects.front();
}

CommandResult cmd_encode(const JobDocument& doc, double tol) {
  const ModelContext ctx = ModelContext::standard(doc.n, doc.k);
  if (doc.objects.empty()) throw InputError("encode expects at least one object");
  json objs = json::array();
  for (const auto& o : doc.objects) {
    std::vector<LVec> zs;
    for (const auto& g : o.generators) {
      validate(ctx, g, tol);
      zs.push_back(encode(ctx, g));
    }
    const Matrix g = gram(zs);
    const double residual =
        (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
    const SpacelikeSubspace v = subspace_of(ctx, o.generators, tol);
    objs.push_back({{"name", o.name},
                    {"vectors", to_json(rows_of(zs))},
                    {"basis", to_json(rows_of(v.basis()))},
                    {"gram", to_json(g)},
                    {"gram_residual", residual}});
  }
  return {0, dump({{"context", {{"n", doc.n}, {"k", doc.k}}}, {"objects", objs}})};
}

CommandResult cmd_congruent(const JobDocument& doc, double tol, bool witness) {
  const ModelContext ctx = ModelContext::standard(doc.n, doc.k);
  if (doc.objects.size() != 2) {
    throw InputError("congruent expects exactly two objects, got " +
                     std::to_string(doc.objects.size()));
  }
  const UmbilicalSpec sa = make_spec(ctx, doc.objects[0].generators, tol);
  const UmbilicalSpec sb = make_spec(ctx, doc.objects[1].generators, tol);
  const SpacelikeSubspace a = subspace_of(ctx, sa, tol);
  const SpacelikeSubspace b = subspace_of(ctx, sb, tol);
  const bool verdict = are_congruent(ctx, a, b);
  json out = {{"verdict", verdict},
              {"invariants",
               {{{"name", doc.objects[0].name}, {"invariant", invariant_json(invariant_of(ctx, a, tol))}},
                {{"name", doc.objects[1].name}, {"invariant", invariant_json(invariant_of(ctx, b, tol))}}}}};
  if (sa.codim() == 1) {
    out["closed_form_verdict"] =
        congruent_codim1_euclid(ctx, sa.generators[0], sb.generators[0]);
  } else if (sa.codim() == 2) {
    out["closed_form_verdict"] = congruent_codim2_euclid(ctx, sa, sb);
  }
  if (witness && verdict) {
    const CongruenceWitness w = build_block_isometry(ctx, a, b);
    out["witness"] = {{"matrix", to_json(w.t)},
                      {"lorentz_residual", w.lorentz_residual},
                      {"block_residual", w.block_residual},
                      {"subspace_distance", w.subspace_distance},
                      {"is_block_isometry", is_block_isometry(ctx, w.t, tol)}};
  }
  return {0, dump(out)};
}

json orbit_json(const OrbitStructure& o) {
  return {{"acting", std::string(to_string(o.acting))},
          {"cohomogeneity", o.cohomogeneity},
          {"w1_orbit_dim", o.w1_orbit_dim},
          {"w2_orbit_dim", o.w2_orbit_dim}};
}

CommandResult cmd_classify(const JobDocument& doc, double tol) {
  const ModelContext ctx = ModelContext::standard(doc.n, doc.k);
  if (doc.objects.empty()) throw InputError("classify expects at least one object");
  json objs = json::array();
  for (const auto& o : doc.objects) {
    const UmbilicalSpec spec = make_spec(ctx, o.generators, tol);
    const SpacelikeSubspace v = subspace_of(ctx, spec, tol);
    const bool substantial = is_substantial(ctx, v, tol);
    json entry = {{"name", o.name},
                  {"codim", spec.codim()},
                  {"dimension", ctx.n() + 1 - spec.codim()},
                  {"substantial", substantial},
                  {"max_substantial_codim", max_substantial_codim(ctx.n(), ctx.k())},
                  {"topology", to_string(classify_topology(ctx, spec, tol))}};
    if (substantial) {
      const CongruenceInvariant inv = invariant_of(ctx, v, tol);
      entry["invariant"] = inv.perp_eigs;
      entry["tangential_rank"] = inv.tangential_rank;
      entry["tangential_degenerate"] = inv.tangential_degenerate;
      entry["orbit_structure"] = orbit_json(orbit_structure(ctx, v, tol));
      if (spec.codim() <= 2) {
        entry["canonical"] = spec_json(canonical_form(ctx, spec, tol));
      }
    } else {
      const IntersectionDims d = intersection_dims(ctx, v, tol);
      entry["totally_geodesic_reduction"] = {
          {"dim_v_cap_w1", d.with_w1},
          {"dim_v_cap_w2", d.with_w2},
          {"totally_geodesic", is_totally_geodesic(ctx, v, tol)}};
    }
    objs.push_back(std::move(entry));
  }
  return {0, dump({{"context", {{"n", doc.n}, {"k", doc.k}}}, {"objects", objs}})};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CommandResult cmd_profile(const JobDocument& doc, double tol, const Options& opts) {
  const ModelContext ctx = ModelContext::standard(doc.n, doc.k);
  const NamedObject& o = only_object(doc, "profile");
  const int samples = opts.samples.value_or(doc.samples.value_or(kDefaultSamples));
  if (samples < 2) throw InputError("samples: need at least 2");
  const UmbilicalSpec spec = make_spec(ctx, o.generators, tol);
  const ProfileCase pc = profile_case(ctx, spec, tol);
  const auto curve = profile_curve(ctx, spec, samples, tol);

  if (opts.format == OutputFormat::kCsv) {
    std::string out = "theta";
    for (int i = 1; i <= ctx.euclid_dim(); ++i) out += ",x_" + std::to_string(i);
    out += ",slice_angle,membership_residual\n";
    for (const auto& s : curve) {
      out += fmt(s.theta);
      for (double x : s.x) out += "," + fmt(x);
      out += "," + fmt(s.slice_angle) + "," + fmt(s.membership_residual) + "\n";
    }
    return {0, out};
  }
  json rows = json::array();
  for (const auto& s : curve) {
    rows.push_back({{"theta", s.theta},
                    {"x", to_json(s.x)},
                    {"slice_angle", s.slice_angle},
                    {"membership_residual", s.membership_residual}});
  }
  json out = {{"name", o.name},
              {"case",
               {{"kind", std::string(to_string(pc.kind))},
                {"theta_min", pc.theta_min},
                {"theta_max", pc.theta_max},
                {"min_closed", pc.min_closed},
                {"max_closed", pc.max_closed},
                {"codim", pc.codim},
                {"radius", pc.radius},
                {"c", pc.c},
                {"boundary_family", pc.boundary_family},
                {"tangential_square", pc.tangential_square}}},
              {"samples", rows}};
  return {0, dump(out)};
}

CommandResult cmd_selftest(const JobDocument& doc, double tol, const Options& opts) {
  SelftestConfig cfg;
  cfg.seed = opts.seed.value_or(doc.seed.value_or(0));
  cfg.trials = opts.trials.value_or(doc.trials.value_or(cfg.trials));
  if (cfg.trials < 1) throw InputError("trials: need at least 1");
  cfg.perturb = opts.perturb;
  cfg.tol = tol;
  const json report = selftest_report(cfg);
  return {report.at("pass").get<bool>() ? 0 : 1, dump(report)};
}

}  // namespace

CommandResult execute(const Options& opts, const std::string& document,
                      const char* env_tol) {
  try {
    JobDocument doc;
    if (opts.command == "selftest" &&
        document.find_first_not_of(" \t\r\n") == std::string::npos) {
      doc.n = 3;
      doc.k = 2;
    } else {
      doc = parse_job_text(document);
    }
    const double tol = resolve_tolerance(opts.tol, doc, env_tol);
    if (opts.command == "encode") return cmd_encode(doc, tol);
    if (opts.command == "congruent") return cmd_congruent(doc, tol, opts.witness);
    if (opts.command == "classify") return cmd_classify(doc, tol);
    if (opts.command == "profile") return cmd_profile(doc, tol, opts);
    if (opts.command == "selftest") return cmd_selftest(doc, tol, opts);
    return error_result(2, "UnknownCommand", "unknown command \"" + opts.command + "\"");
  } catch (const InputError& e) {
    return error_result(2, "InvalidInput", e.what());
  } catch (const Error& e) {
    return error_result(is_precondition_error(e.code()) ? 3 : 2,
                        std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return error_result(1, "InternalError", e.what());
  }
}

}  // namespace umbilic::cli
