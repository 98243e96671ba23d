#include <iostream>

#include <CLI11.hpp>

#include "fnls/cli/runner.hpp"
#include "fnls/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fractional NLS spectral laboratory"};
  app.set_version_flag("--version", std::string(fnls::kVersion));
  app.require_subcommand(1);

  fnls::cli::RunOptions run;
  std::string out_dir;
  int jobs = 0;
  auto* run_cmd = app.add_subcommand("run", "run every experiment in a config");
  run_cmd->add_option("config_path", run.config, "config file")->required();
  run_cmd->add_option("--out", out_dir, "output directory, overrides output_dir");
  run_cmd->add_option("--jobs", jobs, "parallel experiments (fallback FNLS_LAB_JOBS)")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--quiet", run.quiet, "only report failures");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a config without running it");
  validate_cmd->add_option("config_path", validate_path, "config file")->required();

  auto* schema_cmd = app.add_subcommand("emit-schema", "print the config schema as JSON");

  // --config is accepted in place of the positional path.
  run_cmd->add_option("--config", run.config, "config file")->excludes(run_cmd->get_option("config_path"));
  run_cmd->get_option("config_path")->required(false);
  validate_cmd->add_option("--config", validate_path, "config file")
      ->excludes(validate_cmd->get_option("config_path"));
  validate_cmd->get_option("config_path")->required(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fnls::cli::kConfigFailure;
  }

  if (*schema_cmd) return fnls::cli::emit_schema_command(std::cout);
  if (*validate_cmd) {
    if (validate_path.empty()) {
      std::cerr << "error: no config given\n";
      return fnls::cli::kConfigFailure;
    }
    return fnls::cli::validate_command(validate_path, std::cout, std::cerr);
  }
  if (run.config.empty()) {
    std::cerr << "error: no config given\n";
    return fnls::cli::kConfigFailure;
  }
  if (!out_dir.empty()) run.out = out_dir;
  if (jobs > 0) run.jobs = jobs;
  return fnls::cli::run_command(run, std::cout, std::cerr);
}
