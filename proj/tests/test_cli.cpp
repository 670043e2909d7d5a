#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "umbilic/cli/commands.hpp"
#include "umbilic/cli/job.hpp"
#include "umbilic/congruence.hpp"

namespace umbilic::cli {
namespace {

using nlohmann::json;

CommandResult run(const std::string& cmd, const json& doc, Options opts = {}) {
  opts.command = cmd;
  return execute(opts, doc.dump(), nullptr);
}

json sphere(std::vector<double> c, double r) {
  return {{"type", "sphere"}, {"center", c}, {"radius", r}};
}

json plane(std::vector<double> n, double c) {
  return {{"type", "hyperplane"}, {"normal", n}, {"offset", c}};
}

json doc(int n, int k, json objects) {
  return {{"context", {{"n", n}, {"k", k}}}, {"objects", objects}};
}

json sphere_plane_pair(double c, double r) {
  const double s = std::sqrt(1 + c * c);
  return {{"generators", {sphere({s, 0, 0, 1}, r), plane({c / s, 0, 1 / s, 0}, c)}}};
}

TEST(CliEncode, UnitSphere) {
  const auto r = run("encode", doc(3, 2, {sphere({0, 0, 0, 0}, 1)}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json out = json::parse(r.body);
  EXPECT_EQ(out["objects"][0]["basis"], json::parse("[[0,0,0,0,0,1]]"));
}

TEST(CliEncode, NegativeRadius) {
  const auto r = run("encode", doc(3, 2, {sphere({0, 0, 0, 0}, -1)}));
  EXPECT_EQ(r.exit_code, 2);
  const json out = json::parse(r.body);
  EXPECT_NE(out["error"]["message"].get<std::string>().find("radius must be positive"),
            std::string::npos);
}

TEST(CliEncode, OrthogonalPairGram) {
  const json pair = {{"name", "cut"},
                     {"generators", {sphere({0, 0, 0, 0}, 1), plane({1, 0, 0, 0}, 0)}}};
  const auto r = run("encode", doc(3, 2, {pair}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json out = json::parse(r.body);
  EXPECT_EQ(out["objects"][0]["gram"], json::parse("[[1,0],[0,1]]"));
  EXPECT_EQ(out["objects"][0]["gram_residual"].get<double>(), 0.0);
}

TEST(CliCongruent, RatioTest) {
  // |x0^perp| / r = 2 for both.
  const auto r = run("congruent", doc(3, 2, {sphere({0, 2, 0, 0}, 1),
                                             sphere({5, 0, 3, 3 * std::sqrt(3.0)}, 3)}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json out = json::parse(r.body);
  EXPECT_TRUE(out["verdict"].get<bool>());
  EXPECT_TRUE(out["closed_form_verdict"].get<bool>());
}

TEST(CliCongruent, SpherePlanePairMembers) {
  const auto r = run("congruent", doc(3, 2, {sphere_plane_pair(1, 1), sphere_plane_pair(1, 0.5)}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json out = json::parse(r.body);
  EXPECT_FALSE(out["verdict"].get<bool>());
  EXPECT_NEAR(out["invariants"][0]["invariant"]["perp_eigs"][1].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(out["invariants"][1]["invariant"]["perp_eigs"][1].get<double>(), 4.0, 1e-12);
}

TEST(CliCongruent, WitnessIsBlockIsometry) {
  Options opts;
  opts.witness = true;
  const auto r = run("congruent",
                     doc(3, 2, {sphere({0, 2, 0, 0}, 1), sphere({0, 0, 4, 0}, 2)}), opts);
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json out = json::parse(r.body);
  ASSERT_TRUE(out.contains("witness"));
  EXPECT_TRUE(out["witness"]["is_block_isometry"].get<bool>());
  const auto& m = out["witness"]["matrix"];
  Matrix t(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t(i, j) = m[i][j].get<double>();
  EXPECT_TRUE(is_block_isometry(ModelContext::standard(3, 2), t));
}

TEST(CliCongruent, NotSubstantialExitsThree) {
  const auto r = run("congruent", doc(3, 2, {sphere({0, 0, 0, 0}, 1), sphere({0, 2, 0, 0}, 1)}));
  EXPECT_EQ(r.exit_code, 3);
  const json out = json::parse(r.body);
  EXPECT_EQ(out["error"]["code"], "NotSubstantial");
  EXPECT_NE(out["error"]["message"].get<std::string>().find("totally geodesic"),
            std::string::npos);
}

TEST(CliClassify, TangentSphere) {
  const auto r = run("classify", doc(3, 2, {sphere({0, 1, 0, 0}, 1)}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json o = json::parse(r.body)["objects"][0];
  EXPECT_TRUE(o["substantial"].get<bool>());
  ASSERT_EQ(o["invariant"].size(), 1u);
  EXPECT_NEAR(o["invariant"][0].get<double>(), 1.0, 1e-15);
  EXPECT_EQ(o["topology"], "EUCLIDEAN(3)");
  const json c = o["canonical"][0];
  EXPECT_EQ(c["type"], "sphere");
  EXPECT_NEAR(c["radius"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(c["center"][3].get<double>(), 1.0, 1e-12);
}

TEST(CliClassify, UnitSphereIsNotSubstantial) {
  const auto r = run("classify", doc(3, 2, {sphere({0, 0, 0, 0}, 1)}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json o = json::parse(r.body)["objects"][0];
  EXPECT_FALSE(o["substantial"].get<bool>());
  EXPECT_FALSE(o.contains("canonical"));
}

TEST(CliClassify, SpherePlanePairIdempotent) {
  const auto r = run("classify", doc(3, 2, {sphere_plane_pair(1, 0.5)}));
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json c = json::parse(r.body)["objects"][0]["canonical"];
  EXPECT_NEAR(c[0]["radius"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(c[1]["offset"].get<double>(), 1.0, 1e-12);
}

TEST(CliProfile, CsvRows) {
  Options opts;
  opts.format = OutputFormat::kCsv;
  opts.samples = 4;
  const auto r = run("profile", doc(3, 3, {sphere({0, 0, 0, 1}, 1)}), opts);
  ASSERT_EQ(r.exit_code, 0) << r.body;
  std::istringstream in(r.body);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,x_1,x_2,x_3,x_4,slice_angle,membership_residual");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const double res = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_LT(res, 1e-9);
  }
  EXPECT_EQ(rows, 4);
  EXPECT_EQ(r.body.find('\r'), std::string::npos);
}

TEST(CliProfile, SphericalEndpoints) {
  Options opts;
  opts.samples = 5;
  const auto r = run("profile", doc(3, 3, {sphere({0, 0, 0, 1}, 0.5)}), opts);
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const json s = json::parse(r.body)["samples"];
  ASSERT_EQ(s.size(), 5u);
  EXPECT_NEAR(s.front()["theta"].get<double>(), -2 * std::numbers::pi / 3, 1e-12);
  EXPECT_NEAR(s.back()["theta"].get<double>(), 2 * std::numbers::pi / 3, 1e-12);
}

TEST(CliProfile, WrongContext) {
  const auto r = run("profile", doc(3, 2, {sphere({0, 0, 0, 1}, 0.5)}));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(json::parse(r.body)["error"]["code"], "WrongContext");
}

TEST(CliSelftest, DeterministicAndPassing) {
  Options opts;
  opts.seed = 3;
  opts.trials = 10;
  opts.command = "selftest";
  const auto a = execute(opts, "", nullptr);
  const auto b = execute(opts, "", nullptr);
  EXPECT_EQ(a.exit_code, 0) << a.body;
  EXPECT_EQ(a.body, b.body);
  const json rep = json::parse(a.body);
  for (const auto& s : rep["suites"]) EXPECT_GT(s["checks"].get<int>(), 0);
  EXPECT_TRUE(rep["negative_control"]["detected"].get<bool>());
}

TEST(CliSelftest, InjectedPerturbationIsReported) {
  Options opts;
  opts.command = "selftest";
  opts.trials = 5;
  opts.perturb = 1e-3;
  const auto r = execute(opts, "", nullptr);
  EXPECT_NE(r.exit_code, 0);
  const json rep = json::parse(r.body);
  EXPECT_FALSE(rep["pass"].get<bool>());
}

TEST(CliInput, Errors) {
  Options opts;
  opts.command = "classify";
  EXPECT_EQ(execute(opts, "{not json", nullptr).exit_code, 2);
  EXPECT_EQ(execute(opts, R"({"objects":[]})", nullptr).exit_code, 2);
  EXPECT_EQ(run("classify", doc(3, 2, {sphere({0, 0, 0}, 1)})).exit_code, 2);
  EXPECT_EQ(run("classify", doc(1, 1, json::array())).exit_code, 2);
  EXPECT_EQ(run("bogus", doc(3, 2, {sphere({0, 1, 0, 0}, 1)})).exit_code, 2);
}

TEST(CliInput, TolerancePrecedence) {
  JobDocument d;
  EXPECT_EQ(resolve_tolerance(std::nullopt, d, nullptr), 1e-9);
  EXPECT_EQ(resolve_tolerance(std::nullopt, d, "1e-7"), 1e-7);
  d.tolerance = 1e-6;
  EXPECT_EQ(resolve_tolerance(std::nullopt, d, "1e-7"), 1e-6);
  EXPECT_EQ(resolve_tolerance(1e-5, d, "1e-7"), 1e-5);
  JobDocument e;
  EXPECT_THROW(resolve_tolerance(std::nullopt, e, "abc"), InputError);
}

TEST(CliInput, HyperplaneNormalIsRescaled) {
  const JobDocument d = parse_job(doc(3, 2, {plane({0, 2, 0, 0}, 4)}));
  const auto& h = std::get<Hyperplane>(d.objects[0].generators[0]);
  EXPECT_EQ(h.normal(1), 1.0);
  EXPECT_EQ(h.offset, 2.0);
}

}  // namespace
}  // namespace umbilic::cli
