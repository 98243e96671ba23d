#include "fnls/cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "fnls/cli/config.hpp"
#include "fnls/cli/experiments.hpp"
#include "fnls/cli/schema.hpp"

namespace fnls::cli {

namespace {

void report(const std::vector<Violation>& vs, std::ostream& err) {
  for (const auto& v : vs) err << "violation: " << (v.path.empty() ? "<root>" : v.path) << ": " << v.message << "\n";
}

}  // namespace

int resolve_jobs(std::optional<int> flag) {
  if (flag) return std::max(1, *flag);
  if (const char* env = std::getenv("FNLS_LAB_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return 1;
}

int validate_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
  nlohmann::json doc;
  try {
    doc = read_config_file(config);
  } catch (const ConfigFileError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigFailure;
  }
  std::vector<Violation> vs;
  parse_config(doc, vs);
  if (!vs.empty()) {
    report(vs, err);
    return kConfigFailure;
  }
  out << "ok\n";
  return kPass;
}

int emit_schema_command(std::ostream& out) {
  out << schema_document().dump(2) << "\n";
  return kPass;
}

int run_command(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  nlohmann::json doc;
  try {
    doc = read_config_file(opt.config);
  } catch (const ConfigFileError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigFailure;
  }
  std::vector<Violation> vs;
  const RunConfig cfg = parse_config(doc, vs);
  if (!vs.empty()) {
    report(vs, err);
    return kConfigFailure;
  }
  const std::filesystem::path dir = opt.out ? *opt.out : cfg.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create output directory " << dir << ": " << ec.message() << "\n";
    return kConfigFailure;
  }

  const std::size_t n = cfg.experiments.size();
  std::vector<ExperimentOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) outcomes[i] = run_experiment(cfg.experiments[i], dir);
  };
  const int jobs = std::min<int>(resolve_jobs(opt.jobs), static_cast<int>(std::max<std::size_t>(n, 1)));
  {
    std::vector<std::jthread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
  }

  bool ok = true;
  for (const auto& o : outcomes) {
    ok = ok && o.pass();
    if (!opt.quiet || !o.pass()) (o.pass() ? out : err) << o.line() << "\n";
  }
  return ok ? kPass : kNumericFailure;
}

}  // namespace fnls::cli
