#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qloop/suites.hpp"

namespace qloop::runner {

inline constexpr const char* kVersion = "0.3.0";
inline constexpr int kMaxLength = 16;

enum ExitCode : int { kOk = 0, kFailures = 1, kConfigError = 2, kResourceError = 3 };

struct RunConfig {
  Backend backend = Backend::spin_half;
  int n_param = 2;
  int length = 4;
  std::vector<int> q_sectors{0};
  RingMode ring = RingMode::cyclotomic;
  std::vector<std::string> suites{"all"};
  int jobs = 1;
  std::string cache_dir;
  std::string report_path;
  bool rescale_audit = false;
  long long cyclic_c = 0;
};

/// Throws ConfigError when an invariant is violated.
void validate(const RunConfig& cfg);

/// Applies one key=value setting. Throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Reads a key=value file ('#' starts a comment) on top of `cfg`.
void load_config_file(RunConfig& cfg, const std::string& path);

StoreConfig store_config(const RunConfig& cfg);

/// Runs every task against one store built from `base`, on `jobs` threads.
/// Records are deduplicated by sort key and returned in canonical order.
struct CacheStats {
  std::size_t computed = 0, disk_hits = 0, disk_writes = 0;
};
std::vector<IdentityCheck> execute(StoreConfig base, const std::vector<Task>& tasks, int jobs,
                                   CacheStats* stats = nullptr);

struct Summary {
  std::size_t exact_zero = 0, vacuous_zero = 0, approx_zero = 0, nonzero = 0, error = 0;
  [[nodiscard]] std::size_t total() const { return exact_zero + vacuous_zero + approx_zero + nonzero + error; }
};
Summary summarize(const std::vector<IdentityCheck>& records);

/// One rescale_audit record per rescaled record, comparing its status with
/// the status of the same check in the unscaled run.
std::vector<IdentityCheck> compare_rescaled(const std::vector<IdentityCheck>& original,
                                            const std::vector<IdentityCheck>& rescaled);

struct RunResult {
  std::vector<IdentityCheck> records;
  Summary summary;
  std::vector<std::string> warnings;
  double wall_ms = 0.0;
  CacheStats cache;  // not part of the report
  nlohmann::json report;
  int exit_code = kOk;
};

/// Validates, plans, executes and assembles the report. Throws ConfigError.
RunResult run(const RunConfig& cfg);

nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const RunConfig& cfg);

/// The report with every timing field removed; equal for equal configs.
nlohmann::json strip_timing(nlohmann::json report);

/// Plain-text summary for standard output.
std::string text_summary(const RunResult& result);

}  // namespace qloop::runner
