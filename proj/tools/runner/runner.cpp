#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <boost/algorithm/string.hpp>

#include "qloop/errors.hpp"

namespace qloop::runner {

namespace {

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigError, key + " expects an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = boost::algorithm::to_lower_copy(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw Error(ErrorKind::ConfigError, key + " expects a boolean, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, value, boost::algorithm::is_any_of(","));
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::algorithm::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

template <class S>
std::vector<std::vector<IdentityCheck>> run_all(StoreConfig cfg, const std::vector<Task>& tasks, int jobs,
                                                CacheStats* stats) {
  OperatorStore<S> store(std::move(cfg));
  std::vector<std::vector<IdentityCheck>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = run_task(tasks[i], store);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (stats) {
    const auto st = store.stats();
    stats->computed += st.computed;
    stats->disk_hits += st.disk_hits;
    stats->disk_writes += st.disk_writes;
  }
  return results;
}

nlohmann::json witness_json(const std::optional<EntryWitness>& w) {
  if (!w) return nullptr;
  return {{"row", w->row}, {"col", w->col}, {"value", w->value}, {"term", w->term}};
}

nlohmann::json params_json(const ParamRecord& params) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : params) {
    std::visit([&](const auto& x) { out[k] = x; }, v);
  }
  return out;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.n_param < 2) throw Error(ErrorKind::ConfigError, "N must be at least 2");
  if (cfg.length < 1 || cfg.length > kMaxLength) {
    throw Error(ErrorKind::ConfigError, "L must lie in 1.." + std::to_string(kMaxLength));
  }
  if (cfg.q_sectors.empty()) throw Error(ErrorKind::ConfigError, "at least one Q is required");
  for (int q : cfg.q_sectors) {
    if (q < 0 || q >= cfg.n_param) throw Error(ErrorKind::ConfigError, "Q values must lie in 0..N-1");
  }
  if (cfg.jobs < 1) throw Error(ErrorKind::ConfigError, "jobs must be at least 1");
  resolve_suites(cfg.suites);
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "backend") {
    auto b = backend_from_string(value);
    if (!b) throw Error(ErrorKind::ConfigError, "unknown backend: " + value);
    cfg.backend = *b;
  } else if (key == "N") {
    cfg.n_param = parse_int(key, value);
  } else if (key == "L") {
    cfg.length = parse_int(key, value);
  } else if (key == "Q") {
    cfg.q_sectors.clear();
    for (const auto& p : split_list(value)) cfg.q_sectors.push_back(parse_int(key, p));
  } else if (key == "ring") {
    auto r = ring_from_string(value);
    if (!r) throw Error(ErrorKind::ConfigError, "unknown ring: " + value);
    cfg.ring = *r;
  } else if (key == "suite") {
    cfg.suites = split_list(value);
  } else if (key == "jobs") {
    cfg.jobs = parse_int(key, value);
  } else if (key == "cache-dir") {
    cfg.cache_dir = value;
  } else if (key == "report") {
    cfg.report_path = value;
  } else if (key == "rescale-audit") {
    cfg.rescale_audit = parse_bool(key, value);
  } else if (key == "c") {
    cfg.cyclic_c = parse_int(key, value);
  } else {
    throw Error(ErrorKind::ConfigError, "unknown config key: " + key);
  }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ConfigError, path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    boost::algorithm::trim(key);
    boost::algorithm::trim(value);
    apply_setting(cfg, key, value);
  }
}

StoreConfig store_config(const RunConfig& cfg) {
  StoreConfig s;
  s.backend = cfg.backend;
  s.n_param = cfg.n_param;
  s.length = cfg.length;
  s.c = LaurentPoly(BigInt(cfg.cyclic_c));
  s.ring = cfg.ring;
  s.cache_dir = cfg.cache_dir;
  return s;
}

std::vector<IdentityCheck> execute(StoreConfig base, const std::vector<Task>& tasks, int jobs, CacheStats* stats) {
  base.max_order = max_divided_order(tasks);
  std::vector<std::vector<IdentityCheck>> parts;
  switch (base.ring) {
    case RingMode::laurent: parts = run_all<LaurentPoly>(base, tasks, jobs, stats); break;
    case RingMode::cyclotomic:
    case RingMode::phi_adic: parts = run_all<CycloElem>(base, tasks, jobs, stats); break;
    case RingMode::floating: parts = run_all<Complex>(base, tasks, jobs, stats); break;
  }
  std::vector<IdentityCheck> out;
  std::set<std::string> seen;
  for (auto& part : parts) {
    for (auto& c : part) {
      if (seen.insert(c.sort_key()).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.sort_key() < b.sort_key(); });
  return out;
}

Summary summarize(const std::vector<IdentityCheck>& records) {
  Summary s;
  for (const auto& c : records) {
    switch (c.status) {
      case Status::ExactZero: ++s.exact_zero; break;
      case Status::VacuousZero: ++s.vacuous_zero; break;
      case Status::ApproxZero: ++s.approx_zero; break;
      case Status::Nonzero: ++s.nonzero; break;
      case Status::Error: ++s.error; break;
    }
  }
  return s;
}

std::vector<IdentityCheck> compare_rescaled(const std::vector<IdentityCheck>& original,
                                            const std::vector<IdentityCheck>& rescaled) {
  std::map<std::string, const IdentityCheck*> by_key;
  for (const auto& c : original) by_key.emplace(c.sort_key(), &c);
  std::vector<IdentityCheck> out;
  for (const auto& r : rescaled) {
    IdentityCheck a;
    a.id = "rescale_audit";
    a.anchor = "status unchanged under E0, F1 -> q^3 E0, q^3 F1 and E1, F0 -> -q E1, -q F0";
    a.params = r.params;
    a.params["check"] = r.id;
    auto it = by_key.find(r.sort_key());
    if (it == by_key.end()) {
      a.status = Status::Nonzero;
      a.witness = EntryWitness{0, 0, "missing in unscaled run", -1};
    } else if (it->second->status == r.status) {
      a.status = Status::ExactZero;
      a.note = to_string(r.status);
    } else {
      a.status = Status::Nonzero;
      a.witness = EntryWitness{0, 0, std::string(to_string(it->second->status)) + " vs " + to_string(r.status), -1};
    }
    out.push_back(std::move(a));
  }
  return out;
}

nlohmann::json to_json(const IdentityCheck& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["params"] = params_json(c.params);
  j["status"] = to_string(c.status);
  j["witness"] = witness_json(c.witness);
  j["nontrivial"] = witness_json(c.nontrivial);
  j["term_nonzero"] = c.term_nonzero;
  if (!c.error.empty()) j["error"] = c.error;
  if (!c.note.empty()) j["note"] = c.note;
  j["millis"] = c.millis;
  return j;
}

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"backend", to_string(cfg.backend)},
          {"N", cfg.n_param},
          {"L", cfg.length},
          {"Q", cfg.q_sectors},
          {"ring", to_string(cfg.ring)},
          {"suites", resolve_suites(cfg.suites)},
          {"rescale_audit", cfg.rescale_audit},
          {"c", cfg.cyclic_c}};
}

nlohmann::json strip_timing(nlohmann::json report) {
  report.erase("wall_time_ms");
  for (auto& r : report["records"]) r.erase("millis");
  return report;
}

RunResult run(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  validate(cfg);
  const auto suites = resolve_suites(cfg.suites);
  PlanConfig plan{cfg.backend, cfg.n_param, cfg.length, cfg.ring, cfg.q_sectors};
  std::vector<Task> tasks, homogeneous;
  for (const auto& s : suites) {
    auto part = plan_suite(s, plan);
    if (suite_is_homogeneous(s)) homogeneous.insert(homogeneous.end(), part.begin(), part.end());
    tasks.insert(tasks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }

  RunResult result;
  const StoreConfig base = store_config(cfg);
  result.records = execute(base, tasks, cfg.jobs, &result.cache);

  if (cfg.rescale_audit && !homogeneous.empty()) {
    StoreConfig scaled = base;
    scaled.rescale = Rescale::audit();
    const auto audited = compare_rescaled(result.records, execute(scaled, homogeneous, cfg.jobs, &result.cache));
    result.records.insert(result.records.end(), audited.begin(), audited.end());
    std::sort(result.records.begin(), result.records.end(),
              [](const auto& a, const auto& b) { return a.sort_key() < b.sort_key(); });
  }

  result.summary = summarize(result.records);
  if (result.summary.vacuous_zero > 0) {
    result.warnings.push_back(std::to_string(result.summary.vacuous_zero) +
                              " checks are vacuous (every term is zero); a longer chain is needed for evidence");
  }
  bool resource = false;
  for (const auto& c : result.records) {
    if (c.error == to_string(ErrorKind::ResourceError) || c.error == to_string(ErrorKind::TruncationOverflow)) {
      resource = true;
    }
  }
  if (resource) {
    result.exit_code = kResourceError;
  } else if (result.summary.nonzero + result.summary.error > 0) {
    result.exit_code = kFailures;
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  nlohmann::json records = nlohmann::json::array();
  for (const auto& c : result.records) records.push_back(to_json(c));
  result.report = {{"tool", "qloop"},
                   {"version", kVersion},
                   {"config", to_json(cfg)},
                   {"records", std::move(records)},
                   {"summary",
                    {{"exact_zero", result.summary.exact_zero},
                     {"vacuous_zero", result.summary.vacuous_zero},
                     {"approx_zero", result.summary.approx_zero},
                     {"nonzero", result.summary.nonzero},
                     {"error", result.summary.error},
                     {"total", result.summary.total()}}},
                   {"warnings", result.warnings},
                   {"wall_time_ms", result.wall_ms}};
  return result;
}

std::string text_summary(const RunResult& result) {
  std::ostringstream os;
  for (const auto& c : result.records) {
    if (c.passed()) continue;
    os << to_string(c.status) << "  " << c.id << "  " << display(c.params);
    if (!c.error.empty()) os << "  [" << c.error << "]";
    if (c.witness) os << "  at (" << c.witness->row << "," << c.witness->col << ") = " << c.witness->value;
    os << "\n";
  }
  for (const auto& w : result.warnings) os << "warning: " << w << "\n";
  const auto& s = result.summary;
  os << "exact_zero=" << s.exact_zero << " vacuous_zero=" << s.vacuous_zero << " approx_zero=" << s.approx_zero
     << " nonzero=" << s.nonzero << " error=" << s.error << " total=" << s.total() << "\n";
  os << "wall_time_ms=" << static_cast<long long>(result.wall_ms) << "\n";
  return os.str();
}

}  // namespace qloop::runner
