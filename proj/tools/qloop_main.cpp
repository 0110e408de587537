#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qloop/errors.hpp"
#include "runner/runner.hpp"

using namespace qloop;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ConfigError:
    case ErrorKind::UnknownId: return runner::kConfigError;
    case ErrorKind::ResourceError:
    case ErrorKind::TruncationOverflow: return runner::kResourceError;
    default: return runner::kFailures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qloop: exact verification of quantum loop algebra relations on spin chains"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run verification suites and write a report");
  std::string config_file, backend, ring, report;
  int n_param = 0, length = 0, jobs = 0;
  std::vector<int> q_list;
  std::vector<std::string> suites;
  std::string cache_dir;
  bool rescale = false;
  long long cyclic_c = 0;
  std::vector<std::string> overrides;
  run->add_option("--config", config_file, "key=value config file; flags override its values");
  run->add_option("--backend", backend, "spin_half, highest_weight or cyclic");
  run->add_option("--N", n_param, "root of unity order (q^2N = 1)");
  run->add_option("--L", length, "chain length");
  run->add_option("--Q", q_list, "charge sector (repeatable)")->take_all();
  run->add_option("--ring", ring, "laurent, cyclotomic, phi-adic or float");
  run->add_option("--suite", suites, "suite name (repeatable); see --list-suites")->take_all();
  run->add_option("--jobs", jobs, "worker threads");
  run->add_option("--cache-dir", cache_dir, "operator cache directory (default: $QLOOP_CACHE_DIR)");
  run->add_option("--report", report, "JSON report path");
  run->add_flag("--rescale-audit", rescale, "rerun homogeneous suites with rescaled generators");
  run->add_option("--c", cyclic_c, "cyclic backend parameter");
  bool list_suites = false;
  run->add_flag("--list-suites", list_suites, "print suite names and exit");

  auto* explain_cmd = app.add_subcommand("explain", "describe an identity by check id");
  std::string check_id;
  bool list_ids = false;
  explain_cmd->add_option("id", check_id, "check id");
  explain_cmd->add_flag("--list", list_ids, "print every known id");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*explain_cmd) {
      if (list_ids) {
        for (const auto& id : explainable_ids()) std::cout << id << "\n";
        return runner::kOk;
      }
      std::cout << explain(check_id);
      return runner::kOk;
    }

    if (list_suites) {
      for (const auto& s : suite_names()) std::cout << s << "\n";
      std::cout << "all\n";
      return runner::kOk;
    }

    runner::RunConfig cfg;
    if (const char* env = std::getenv("QLOOP_CACHE_DIR")) cfg.cache_dir = env;
    if (!config_file.empty()) runner::load_config_file(cfg, config_file);
    auto given = [&](const char* flag) { return run->count(flag) > 0; };
    if (given("--backend")) runner::apply_setting(cfg, "backend", backend);
    if (given("--N")) cfg.n_param = n_param;
    if (given("--L")) cfg.length = length;
    if (given("--Q")) cfg.q_sectors = q_list;
    if (given("--ring")) runner::apply_setting(cfg, "ring", ring);
    if (given("--suite")) cfg.suites = suites;
    if (given("--jobs")) cfg.jobs = jobs;
    if (given("--cache-dir")) cfg.cache_dir = cache_dir;
    if (given("--report")) cfg.report_path = report;
    if (given("--rescale-audit")) cfg.rescale_audit = rescale;
    if (given("--c")) cfg.cyclic_c = cyclic_c;

    const auto result = runner::run(cfg);
    if (!cfg.report_path.empty()) {
      std::ofstream out(cfg.report_path);
      if (!out) throw Error(ErrorKind::ConfigError, "cannot write report to " + cfg.report_path);
      out << result.report.dump(2) << "\n";
    }
    std::cout << runner::text_summary(result);
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "qloop: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
