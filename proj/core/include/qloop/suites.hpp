#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qloop/identity.hpp"
#include "qloop/serre.hpp"

namespace qloop {

/// Suite names accepted by the runner, in canonical order ("all" excluded).
const std::vector<std::string>& suite_names();

/// Expands "all", removes duplicates and orders canonically. Unknown names
/// throw ConfigError.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

/// Suites whose identities are homogeneous in each generator and are rerun
/// under the rescale audit.
bool suite_is_homogeneous(const std::string& suite);

// Units of work produced by the planner. Each task yields one or more checks.

struct SpecTask {
  IdentitySpec spec;
  /// A Nonzero result is reported as Error/WrapInconsistency (cyclic backend).
  bool wrap_sensitive = false;
};

/// The combinatorial suite for one N; independent of any chain.
struct QcombTask {
  int n_param = 2;
};

/// Single-site relations of the backend.
struct SiteGateTask {
  GateMode mode = GateMode::generic;
};

/// Chevalley relations, grading and charges on a chain of the given length.
struct ChainGateTask {
  int length = 1;
};

/// Divided power formed through Laurent and through Phi-adic arithmetic, both
/// specialised; the two must coincide.
struct PhiAuditTask {
  std::string op;
  Norm norm = Norm::q_fact;
  int order = 1;
};

/// Two specs whose residual operators must be identical.
struct ResidualMatchTask {
  std::string id, anchor;
  ParamRecord params;
  IdentitySpec a, b;
};

/// Two specs whose statuses must agree.
struct StatusMatchTask {
  std::string id, anchor;
  ParamRecord params;
  IdentitySpec a, b;
};

using Task = std::variant<SpecTask, QcombTask, SiteGateTask, ChainGateTask, PhiAuditTask, ResidualMatchTask,
                          StatusMatchTask>;

struct PlanConfig {
  Backend backend = Backend::spin_half;
  int n_param = 2;
  int length = 4;
  RingMode ring = RingMode::cyclotomic;
  std::vector<int> q_sectors{0};
};

/// Tasks for one suite. Deterministic.
std::vector<Task> plan_suite(const std::string& suite, const PlanConfig& cfg);

/// Largest divided-power order any task references.
int max_divided_order(const std::vector<Task>& tasks);

/// Runs a task against a store. Never throws for mathematical failures;
/// they become Error records.
template <class S>
std::vector<IdentityCheck> run_task(const Task& task, OperatorStore<S>& store);

extern template std::vector<IdentityCheck> run_task(const Task&, OperatorStore<LaurentPoly>&);
extern template std::vector<IdentityCheck> run_task(const Task&, OperatorStore<CycloElem>&);
extern template std::vector<IdentityCheck> run_task(const Task&, OperatorStore<Complex>&);

/// Short label for a task, used in logs.
std::string task_label(const Task& task);

/// Formula and parameter regime for a check id. Throws UnknownId.
std::string explain(const std::string& check_id);
/// Every id explain() knows, sorted.
std::vector<std::string> explainable_ids();

}  // namespace qloop
