// Command-line front end: build bases, run verification suites, emit
// certificates. Exit codes: 0 success, 1 failed check or internal error,
// 2 invalid configuration.

#include "logder/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int emit(const logder::RunResult& result, const std::optional<std::string>& out_path) {
  if (!result.error.empty()) std::cerr << result.error << "\n";
  if (!result.output.empty()) {
    if (out_path) {
      std::ofstream file(*out_path);
      if (!file) {
        std::cerr << "cannot open output file: " << *out_path << "\n";
        return 2;
      }
      file << result.output;
    } else {
      std::cout << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace logder;

  CLI::App app{"Exact bases and certificates for the coned extended Shi and Catalan "
               "arrangements of type A2"};
  app.require_subcommand(1);

  std::string family = "both";
  std::string format = "json";
  std::vector<std::string> suite_names;
  std::string out_path;
  int k = 0;
  int k_max = 4;
  int k_cap = 8;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "Arrangement family: shi, cat or both")
        ->check(CLI::IsMember({"shi", "cat", "both"}));
    cmd->add_option("--format", format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out_path, "Write output to this path instead of stdout");
    cmd->add_option("--k-cap", k_cap, "Upper bound accepted for k / k-max")->capture_default_str();
  };

  CLI::App* build = app.add_subcommand("build", "Construct and print the bases at one level k");
  build->add_option("--k", k, "Level of the arrangement")->capture_default_str();
  add_common(build);

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites for k = 0..k-max");
  verify->add_option("--k-max", k_max, "Verify levels 0..k-max")->capture_default_str();
  verify
      ->add_option("--suite", suite_names,
                   "Suites to run: saito, srb, weyl, swap, restriction, invariant, all "
                   "(repeatable; default all)")
      ->check(CLI::IsMember({"saito", "srb", "weyl", "swap", "restriction", "invariant", "all"}));
  add_common(verify);

  CLI::App* certify = app.add_subcommand("certify", "Emit bases plus re-checkable Saito certificates");
  certify->add_option("--k", k, "Level of the arrangement")->capture_default_str();
  add_common(certify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunConfig cfg;
  cfg.k = k;
  cfg.k_max = k_max;
  cfg.k_cap = k_cap;
  cfg.family = *parse_family(family);
  cfg.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  if (!out_path.empty()) cfg.out_path = out_path;

  if (app.got_subcommand(build)) {
    cfg.command = Command::build;
  } else if (app.got_subcommand(verify)) {
    cfg.command = Command::verify;
    if (!suite_names.empty()) {
      cfg.suites.clear();
      for (const auto& name : suite_names) {
        if (name == "all") {
          cfg.suites = all_suites();
          break;
        }
        cfg.suites.insert(*parse_suite(name));
      }
    }
  } else {
    cfg.command = Command::certify;
  }

  return emit(run(cfg), cfg.out_path);
}
