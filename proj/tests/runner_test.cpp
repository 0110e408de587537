#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qloop/errors.hpp"
#include "runner/runner.hpp"

using namespace qloop;
using namespace qloop::runner;

namespace {

bool rejects(const RunConfig& cfg) {
  try {
    validate(cfg);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::ConfigError;
  }
  return false;
}

RunConfig small(std::vector<std::string> suites) {
  RunConfig cfg;
  cfg.n_param = 2;
  cfg.length = 3;
  cfg.q_sectors = {0, 1};
  cfg.suites = std::move(suites);
  return cfg;
}

}  // namespace

TEST(Runner, Validation) {
  RunConfig ok;
  EXPECT_NO_THROW(validate(ok));
  auto c = ok;
  c.n_param = 1;
  EXPECT_TRUE(rejects(c));
  c = ok;
  c.length = kMaxLength + 1;
  EXPECT_TRUE(rejects(c));
  c = ok;
  c.q_sectors = {2};
  EXPECT_TRUE(rejects(c));
  c = ok;
  c.jobs = 0;
  EXPECT_TRUE(rejects(c));
  c = ok;
  c.suites = {"bogus"};
  EXPECT_TRUE(rejects(c));
}

TEST(Runner, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "qloop_runner_test.cfg";
  {
    std::ofstream out(path);
    out << "# comment\n backend = highest_weight\nN=3\nL = 2  # trailing\nQ=0, 2\nring=laurent\nsuite=id2\n";
  }
  RunConfig cfg;
  load_config_file(cfg, path.string());
  EXPECT_EQ(cfg.backend, Backend::highest_weight);
  EXPECT_EQ(cfg.n_param, 3);
  EXPECT_EQ(cfg.length, 2);
  EXPECT_EQ(cfg.q_sectors, (std::vector<int>{0, 2}));
  EXPECT_EQ(cfg.ring, RingMode::laurent);
  EXPECT_EQ(cfg.suites, (std::vector<std::string>{"id2"}));

  std::ofstream(path) << "colour=blue\n";
  RunConfig bad;
  EXPECT_THROW(load_config_file(bad, path.string()), Error);
  EXPECT_THROW(apply_setting(bad, "N", "two"), Error);
  std::filesystem::remove(path);
}

TEST(Runner, ReportIsDeterministicAcrossJobCounts) {
  auto a = small({"divpow", "site"});
  auto b = a;
  b.jobs = 4;
  const auto ra = run(a), rb = run(b);
  EXPECT_EQ(ra.exit_code, kOk);
  EXPECT_EQ(strip_timing(ra.report).dump(), strip_timing(rb.report).dump());
  EXPECT_EQ(ra.report["summary"]["total"], ra.records.size());
  EXPECT_EQ(ra.report["tool"], "qloop");
}

TEST(Runner, RescaleAuditAddsAgreeingRecords) {
  auto cfg = small({"site"});
  cfg.rescale_audit = true;
  const auto r = run(cfg);
  EXPECT_EQ(r.exit_code, kOk);
  std::size_t audits = 0;
  for (const auto& rec : r.records) {
    if (rec.id != "rescale_audit") continue;
    ++audits;
    EXPECT_EQ(rec.status, Status::ExactZero) << display(rec.params);
  }
  EXPECT_GT(audits, 0u);
}

TEST(Runner, CyclicWrapIsReportedAsFailure) {
  auto cfg = small({"barred"});
  cfg.backend = Backend::cyclic;
  cfg.n_param = 3;
  cfg.length = 2;
  cfg.q_sectors = {0};
  const auto r = run(cfg);
  EXPECT_EQ(r.exit_code, kFailures);
  bool wrap = false;
  for (const auto& rec : r.records) wrap |= rec.error == "WrapInconsistency";
  EXPECT_TRUE(wrap);
}
