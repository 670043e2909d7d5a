#include "umbilic/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "umbilic/cli/commands.hpp"

namespace umbilic::cli {

namespace {

void print_error(const std::string& code, const std::string& message) {
  const nlohmann::json j = {{"error", {{"code", code}, {"message", message}}}};
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int run_app(int argc, char** argv) {
  CLI::App app{"Umbilical submanifolds of H^k x S^{n-k+1}"};
  app.require_subcommand(1, 1);

  Options opts;
  std::string input;
  std::string out;
  std::string format = "json";
  double tol = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  int trials = 0;

  for (const char* name : {"encode", "congruent", "classify", "profile", "selftest"}) {
    CLI::App* sub = app.add_subcommand(name);
    auto* in = sub->add_option("--input", input, "job document (JSON)");
    if (std::string(name) != "selftest") in->required();
    sub->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--samples", samples, "profile samples");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--trials", trials, "selftest trials per suite");
    sub->add_flag("--witness", opts.witness, "emit the realizing isometry");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out, "output file (default stdout)");
    if (std::string(name) == "selftest") {
      sub->add_option("--perturb", opts.perturb,
                      "perturbation injected into checked isometries");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("InvalidArguments", e.what());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  opts.command = sub->get_name();
  if (sub->count("--tol")) opts.tol = tol;
  if (sub->count("--samples")) opts.samples = samples;
  if (sub->count("--seed")) opts.seed = seed;
  if (sub->count("--trials")) opts.trials = trials;
  opts.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;

  std::string document;
  if (!input.empty()) {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
      print_error("InvalidInput", "cannot read " + input);
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    document = ss.str();
  }

  const CommandResult r = execute(opts, document, std::getenv("UMBILIC_TOL"));
  if (r.exit_code == 0 || (opts.command == "selftest" && r.exit_code == 1)) {
    if (!out.empty()) {
      std::ofstream f(out, std::ios::binary);
      if (!f) {
        print_error("InvalidInput", "cannot write " + out);
        return 2;
      }
      f << r.body;
      return r.exit_code;
    }
  }
  std::cout << r.body;
  return r.exit_code;
}

}  // namespace umbilic::cli
