#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

namespace fnls::cli {

enum ExitCode : int { kPass = 0, kNumericFailure = 1, kConfigFailure = 2 };

struct RunOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<int> jobs;
  bool quiet = false;
};

// --jobs, else FNLS_LAB_JOBS, else 1.
int resolve_jobs(std::optional<int> flag);

int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);
int validate_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int emit_schema_command(std::ostream& out);

}  // namespace fnls::cli
