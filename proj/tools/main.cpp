#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <dunkl_forge/errors.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace dforge;
  CLI::App cli{"Exact and sampled checks for finite-group calculi, cyclic geometry and Dunkl operators"};
  cli.require_subcommand(1);

  app::RunOptions opts;
  std::vector<std::string> paths;
  std::string json_out;
  for (const char* name : {"analyze", "verify", "dunkl", "forms"}) {
    auto* sub = cli.add_subcommand(name);
    sub->add_option("paths", paths, "config files")->required()->check(CLI::ExistingFile);
    sub->add_option("--degree", opts.degree, "monomial degree bound")->check(CLI::Range(0, 8));
    sub->add_option("--samples", opts.samples, "sample count");
    sub->add_option("--seed", opts.seed, "RNG seed");
    sub->add_option("--tol", opts.tol, "identity tolerance");
    sub->add_option("--json", json_out, "write the JSON report here");
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = cli.get_subcommands().front()->get_name();

  std::vector<std::pair<std::string, app::CommandResult>> results;
  try {
    for (const auto& p : paths) {
      const auto cfg = io::read_json_file(p);
      results.emplace_back(std::filesystem::path(p).filename().string(), app::run_command(command, cfg, opts));
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed config: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << app::text_report(command, opts, results);
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 2;
    }
    out << app::document(command, opts, results).dump(2) << "\n";
  }
  for (const auto& [name, r] : results)
    if (!r.report.passed()) return 1;
  return 0;
}
