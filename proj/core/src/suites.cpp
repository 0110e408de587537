#include "qloop/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

const std::vector<std::string> kSuites = {"qcomb", "rep-gate", "barred", "divpow", "id1",
                                          "id2",   "site",     "lemmas", "serre-nested"};

const std::vector<std::string> kEF = {"E0", "E1", "F0", "F1"};
const std::vector<std::string> kBarred = {"B1", "BL", "C0", "CL1"};

void push_spec(std::vector<Task>& out, IdentitySpec spec, bool wrap_sensitive = false) {
  out.emplace_back(SpecTask{std::move(spec), wrap_sensitive});
}

int nilpotency_order(const PlanConfig& cfg) {
  switch (cfg.backend) {
    case Backend::spin_half: return cfg.length + 1;
    case Backend::highest_weight: return (cfg.n_param - 1) * cfg.length + 1;
    case Backend::cyclic: return -1;
  }
  return -1;
}

std::vector<Task> plan_rep_gate(const PlanConfig& cfg) {
  std::vector<Task> out;
  out.emplace_back(SiteGateTask{cfg.ring == RingMode::laurent ? GateMode::generic : GateMode::root_of_unity});
  for (int l = 1; l <= cfg.length; ++l) out.emplace_back(ChainGateTask{l});
  return out;
}

std::vector<Task> plan_barred(const PlanConfig& cfg) {
  std::vector<Task> out;
  for (const auto& op : kBarred) push_spec(out, half_commute_spec(op), cfg.backend == Backend::cyclic);
  for (const char* which : {"Cminus", "Bminus", "Cplus", "Bplus"}) {
    for (int n = 0; n <= 2 * cfg.n_param + 1; ++n) {
      push_spec(out, cross_norm_spec(which, n, cfg.length), cfg.backend == Backend::cyclic);
    }
  }
  return out;
}

void plan_mulo(std::vector<Task>& out, const PlanConfig& cfg) {
  for (int q : cfg.q_sectors) {
    for (const char* op : {"B1", "C0"}) {
      for (int k = 0; k <= 3; ++k) {
        for (int j = 0; k + j <= 3; ++j) push_spec(out, mulo_spec(k, j, q, cfg.n_param, op));
      }
    }
  }
}

std::vector<Task> plan_divpow(const PlanConfig& cfg) {
  std::vector<Task> out;
  const int n_param = cfg.n_param;
  const int nil = nilpotency_order(cfg);
  const int pf_max = std::min(cfg.length + 1, 2 * n_param + 2);
  for (const auto& op : kEF) {
    for (int n = 1; n <= pf_max; ++n) push_spec(out, power_factorial_spec(op, n, Norm::q_fact));
  }
  for (const auto& op : kBarred) {
    for (int n = 1; n <= pf_max; ++n) push_spec(out, power_factorial_spec(op, n, Norm::omega_fact));
  }
  if (nil > 0) {
    for (const auto& op : kEF) push_spec(out, nilpotent_spec(op, nil, Norm::q_fact));
    for (const auto& op : kBarred) push_spec(out, nilpotent_spec(op, nil, Norm::omega_fact));
  }
  const int ratio_max = nil > 0 ? std::min(3 * n_param, nil) : 3 * n_param;
  for (const auto& op : kEF) {
    for (int n = 1; n <= ratio_max; ++n) push_spec(out, norm_ratio_spec(op, n));
  }
  plan_mulo(out, cfg);
  for (const auto& op : kEF) {
    for (int n = 1; n <= 2 * n_param + 2; ++n) out.emplace_back(PhiAuditTask{op, Norm::q_fact, n});
  }
  for (const auto& op : kBarred) {
    for (int n = 1; n <= 2 * n_param + 2; ++n) out.emplace_back(PhiAuditTask{op, Norm::omega_fact, n});
  }
  return out;
}

std::vector<Task> plan_id1(const PlanConfig& cfg) {
  std::vector<Task> out;
  const int n_param = cfg.n_param;
  for (int n = 0; n <= 2; ++n) {
    for (int m = 2 * n + 1; m <= 2 * n + n_param + 1; ++m) {
      for (Pair p : all_pairs()) {
        push_spec(out, higher_serre_spec(n, m, p));
        push_spec(out, g_form_spec(n, m, p, n_param, Branch::full));
        push_spec(out, g_form_spec(n, m, p, n_param, Branch::truncated));
        push_spec(out, g_zero_spec(n, m, p, n_param, Branch::truncated));
        if (m - 2 * n >= n_param) push_spec(out, g_zero_spec(n, m, p, n_param, Branch::full));
      }
    }
    for (int m = 2 * n + n_param; m <= 2 * n + 2 * n_param; ++m) {
      for (Pair p : all_pairs()) push_spec(out, id1_spec(n, m, p, n_param));
    }
  }
  for (int q : cfg.q_sectors) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      push_spec(out, bcn_spec(q, n_param, s));
      push_spec(out, cbn_spec(q, n_param, s));
      const Pair forward = s == Sign::plus ? Pair::E0_E1 : Pair::F1_F0;
      const Pair backward = s == Sign::plus ? Pair::E1_E0 : Pair::F0_F1;
      const int m = 2 * n_param + q;
      out.emplace_back(ResidualMatchTask{"id1_vs_bcn", "id1 at (n, m) = (Q, 2N+Q) has the same residual as bcn",
                                         ParamRecord{{"Q", static_cast<long long>(q)}, {"branch", to_string(s)}},
                                         id1_spec(q, m, forward, n_param), bcn_spec(q, n_param, s)});
      out.emplace_back(ResidualMatchTask{"id1_vs_cbn", "id1 at (n, m) = (Q, 2N+Q) has the same residual as cbn",
                                         ParamRecord{{"Q", static_cast<long long>(q)}, {"branch", to_string(s)}},
                                         id1_spec(q, m, backward, n_param), cbn_spec(q, n_param, s)});
    }
  }
  return out;
}

std::vector<Task> plan_id2(const PlanConfig& cfg) {
  std::vector<Task> out;
  const int n_param = cfg.n_param;
  const int q_max = *std::max_element(cfg.q_sectors.begin(), cfg.q_sectors.end());
  for (int n = 0; n <= n_param + q_max; ++n) {
    for (int m = 2 * n + 1; m <= 2 * n + n_param - 1; ++m) {
      for (Pair p : all_pairs()) push_spec(out, id2_spec(n, m, p, n_param));
      for (int p = m - 2 * n; p <= n_param - 1; ++p) {
        for (int k = 0; k <= 1; ++k) {
          for (const auto& op : kEF) push_spec(out, wrap_vanish_spec(k, p, n, m, op, n_param));
        }
      }
    }
  }
  for (int q : cfg.q_sectors) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      push_spec(out, bcb_spec(q, n_param, s));
      push_spec(out, cbc_spec(q, n_param, s));
      push_spec(out, bcbc_spec(q, n_param, s));
      push_spec(out, cbcb_spec(q, n_param, s));
    }
  }
  return out;
}

std::vector<Task> plan_site(const PlanConfig& cfg) {
  std::vector<Task> out;
  for (int q : cfg.q_sectors) {
    for (Side side : {Side::one_zero, Side::L_Lm1}) {
      auto site = site_specs(q, cfg.n_param, side);
      auto origin = site_origin_specs(q, cfg.n_param, side);
      for (std::size_t i = 0; i < site.size(); ++i) {
        push_spec(out, site[i]);
        push_spec(out, origin[i]);
        out.emplace_back(StatusMatchTask{"site_vs_pm",
                                         "barred form and +- form of the same relation have the same status",
                                         ParamRecord{{"Q", static_cast<long long>(q)},
                                                     {"side", to_string(side)},
                                                     {"relation", site[i].id}},
                                         site[i], origin[i]});
      }
    }
  }
  return out;
}

std::vector<Task> plan_lemmas(const PlanConfig& cfg) {
  std::vector<Task> out;
  for (int q : cfg.q_sectors) {
    for (auto& s : lemma_specs(q, cfg.n_param)) push_spec(out, std::move(s));
  }
  plan_mulo(out, cfg);
  return out;
}

std::vector<Task> plan_nested(const PlanConfig& cfg) {
  std::vector<Task> out;
  for (int q : cfg.q_sectors) {
    for (const char* family : {"x", "xbar"}) {
      for (auto& s : nested_specs(q, cfg.n_param, family)) push_spec(out, std::move(s));
    }
  }
  return out;
}

int spec_max_order(const IdentitySpec& s) {
  int best = 0;
  for (const auto* list : {&s.terms, &s.support}) {
    for (const auto& t : *list) {
      for (const auto& f : t.factors) best = std::max(best, f.order);
    }
  }
  return best;
}

IdentityCheck meta_check(std::string id, std::string anchor, ParamRecord params, const StoreConfig& cfg) {
  IdentityCheck c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  params.emplace("backend", std::string(to_string(cfg.backend)));
  params.emplace("N", static_cast<long long>(cfg.n_param));
  params.emplace("L", static_cast<long long>(cfg.length));
  params.emplace("ring", std::string(to_string(cfg.ring)));
  c.params = std::move(params);
  return c;
}

template <class S>
std::optional<EntryWitness> difference_witness(const GradedOperator<S>& a, const GradedOperator<S>& b,
                                               const RingContext& ctx) {
  const auto diff = GradedOperator<S>::axpy(a, scalar_traits<S>::from_laurent(LaurentPoly(-1), ctx), b);
  auto e = diff.first_nonzero();
  if (!e) return std::nullopt;
  return EntryWitness{e->row, e->col, scalar_traits<S>::to_string(e->value), -1};
}

template <class S>
std::vector<IdentityCheck> run_chain_gate(const ChainGateTask& task, OperatorStore<S>& parent) {
  StoreConfig cfg = parent.config();
  cfg.length = task.length;
  cfg.cache_dir.clear();
  cfg.rescale = Rescale{};
  OperatorStore<S> store(cfg);
  std::vector<IdentityCheck> out;
  for (const auto& spec : chain_gate_specs()) out.push_back(evaluate(spec, store));
  for (const auto& name : {"E0", "E1", "F0", "F1", "B1", "BL", "C0", "CL1"}) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck c = meta_check(std::string("chain.charge_") + name, "X shifts the A_L sector by its charge", {}, cfg);
    try {
      const auto op = store.get(base(name));
      const int want = store.space()->shift(expected_charge(name), 0);
      if (op->is_zero()) {
        c.status = Status::VacuousZero;
      } else if (op->charge() == want) {
        c.status = Status::ExactZero;
      } else {
        c.status = Status::Nonzero;
        c.witness = EntryWitness{0, 0, "charge " + std::to_string(op->charge()), -1};
      }
      c.note = "expected charge " + std::to_string(expected_charge(name));
    } catch (const Error& e) {
      c.status = Status::Error;
      c.error = to_string(e.kind());
      c.note = e.what();
    }
    c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(c));
  }
  return out;
}

template <class S>
IdentityCheck run_phi_audit(const PhiAuditTask& task, OperatorStore<S>& store) {
  const auto t0 = std::chrono::steady_clock::now();
  IdentityCheck c = meta_check("phi_adic_audit", "Laurent and Phi-adic routes give the same specialised divided power",
                               {{"op", task.op}, {"n", static_cast<long long>(task.order)},
                                {"norm", std::string(to_string(task.norm))}},
                               store.config());
  try {
    const auto a = store.specialised_via(Symbolic::laurent, task.op, task.norm, task.order);
    const auto b = store.specialised_via(Symbolic::phi_adic, task.op, task.norm, task.order);
    c.witness = difference_witness(a, b, store.ring_context());
    if (c.witness) {
      c.status = Status::Nonzero;
    } else if (a.is_zero()) {
      c.status = Status::VacuousZero;
    } else {
      c.status = Status::ExactZero;
      auto e = a.first_nonzero();
      c.nontrivial = EntryWitness{e->row, e->col, e->value.to_string(), 0};
    }
    c.note = "phi truncation " + std::to_string(store.phi_trunc());
  } catch (const Error& e) {
    c.status = Status::Error;
    c.error = to_string(e.kind());
    c.note = e.what();
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

template <class S>
IdentityCheck run_residual_match(const ResidualMatchTask& task, OperatorStore<S>& store) {
  const auto t0 = std::chrono::steady_clock::now();
  IdentityCheck c = meta_check(task.id, task.anchor, task.params, store.config());
  try {
    const auto a = residual(task.a, store);
    const auto b = residual(task.b, store);
    c.witness = difference_witness(a, b, store.ring_context());
    c.status = c.witness ? Status::Nonzero : Status::ExactZero;
    c.note = a.is_zero() ? "both residuals are zero" : "residuals coincide entrywise";
    if (c.witness) c.note = "residuals differ";
  } catch (const Error& e) {
    c.status = Status::Error;
    c.error = to_string(e.kind());
    c.note = e.what();
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

template <class S>
IdentityCheck run_status_match(const StatusMatchTask& task, OperatorStore<S>& store) {
  const auto t0 = std::chrono::steady_clock::now();
  IdentityCheck c = meta_check(task.id, task.anchor, task.params, store.config());
  const IdentityCheck a = evaluate(task.a, store);
  const IdentityCheck b = evaluate(task.b, store);
  const std::string desc = std::string(to_string(a.status)) + " vs " + to_string(b.status);
  if (a.status == b.status) {
    c.status = Status::ExactZero;
    c.note = desc;
  } else {
    c.status = Status::Nonzero;
    c.witness = EntryWitness{0, 0, desc, -1};
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

struct CatalogEntry {
  std::string formula;
  std::string regime;
};

const std::vector<std::pair<std::string, std::string>> kRegimes = {
    {"higher_serre", "generic q; m > 2n; (ti, tj) = (E0, E1), (E1, E0), (F1, F0), (F0, F1)"},
    {"id1_vs_", "root of unity; compares two residual operators entrywise"},
    {"id1", "root of unity; m - 2n >= N"},
    {"id2", "root of unity; 1 <= m - 2n <= N - 1"},
    {"wrap_vanish", "root of unity; 1 <= m - 2n <= p <= N - 1"},
    {"g_form", "generic q; truncated branch needs m > 2n"},
    {"g_zero_full", "generic q; m - 2n >= N"},
    {"g_zero_truncated", "generic q; m > 2n"},
    {"site_vs_pm", "root of unity; compares the statuses of the barred and +- forms"},
    {"site_", "root of unity; barred operators, omega-normalised; 0 <= Q <= N - 1"},
    {"bc", "root of unity; +- operators (E0, E1) or (F1, F0), q-normalised; 0 <= Q <= N - 1"},
    {"cb", "root of unity; +- operators (E0, E1) or (F1, F0), q-normalised; 0 <= Q <= N - 1"},
    {"lemma_", "root of unity; loop generators x+ = C0^(N+Q) B1^(Q), x- = C0^(Q) B1^(N+Q)"},
    {"nested_", "root of unity; loop generators in sector Q; nontrivial once L is large enough"},
    {"mulo", "root of unity; k, j >= 0, 0 <= Q <= N - 1"},
    {"power_factorial", "any q; n >= 0"},
    {"nilpotent", "any q; n one above the chain's nilpotency order"},
    {"norm_ratio", "any q; n >= 0"},
    {"cross_norm", "any q; n >= 0"},
    {"half_commute", "any q; the cyclic backend reports failures as WrapInconsistency"},
    {"phi_adic_audit", "root of unity; every divided power used by a run"},
    {"chain.", "generic q for spin_half and highest_weight; root of unity for cyclic"},
    {"site.", "single site; z_order and k_z at the root of unity only"},
    {"rescale_audit", "reruns a homogeneous suite with E0, F1 scaled by q^3 and E1, F0 by -q"},
    {"q_omega_factorial", "Z[q]/Phi_2N; n >= 0"},
    {"gauss_periodicity", "Z[q]/Phi_2N; 0 <= p <= N - 1, 0 <= l <= N - 1"},
    {"alternating_sum", "Z[q]/Phi_2N; 0 <= p <= N - 1"},
    {"vanishing_wrap", "Z[q]/Phi_2N; 1 <= m - 2n <= p <= N - 1"},
    {"c_closed_form", "Z[q]/Phi_2N; truncated c_s with m - 2n >= N"},
    {"omega_lucas", "Z[q]/Phi_2N; 0 <= Q <= N - 1"},
    {"phi_valuation", "exact valuation at Phi_2N"},
};

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> table = [] {
    std::map<std::string, std::string> formulas;
    PlanConfig cfg;
    cfg.n_param = 3;
    cfg.length = 4;
    cfg.q_sectors = {0, 1, 2};
    for (const auto& suite : kSuites) {
      if (suite == "qcomb" || suite == "rep-gate") continue;
      for (const auto& task : plan_suite(suite, cfg)) {
        if (const auto* s = std::get_if<SpecTask>(&task)) {
          formulas.emplace(s->spec.id, s->spec.anchor);
        } else if (const auto* r = std::get_if<ResidualMatchTask>(&task)) {
          formulas.emplace(r->id, r->anchor);
        } else if (const auto* m = std::get_if<StatusMatchTask>(&task)) {
          formulas.emplace(m->id, m->anchor);
        }
      }
    }
    for (const auto& s : chain_gate_specs()) formulas.emplace(s.id, s.anchor);
    for (const char* name : {"E0", "E1", "F0", "F1", "B1", "BL", "C0", "CL1"}) {
      formulas.emplace(std::string("chain.charge_") + name, "X shifts the A_L sector by its charge");
    }
    for (const auto& c : rep_self_check(build_site_rep(Backend::spin_half, 2), GateMode::root_of_unity)) {
      formulas.emplace(c.id, c.anchor);
    }
    for (const auto& c : qcomb_suite(2)) formulas.emplace(c.id, c.anchor);
    formulas.emplace("phi_adic_audit", "Laurent and Phi-adic routes give the same specialised divided power");
    formulas.emplace("rescale_audit", "every status is unchanged under the generator rescaling");

    std::map<std::string, CatalogEntry> out;
    for (auto& [id, formula] : formulas) {
      std::string regime;
      for (const auto& [prefix, text] : kRegimes) {
        if (id.rfind(prefix, 0) == 0) {
          regime = text;
          break;
        }
      }
      out.emplace(id, CatalogEntry{formula, regime});
    }
    return out;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() { return kSuites; }

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::set<std::string> want;
  for (const auto& r : requested) {
    if (r == "all") {
      want.insert(kSuites.begin(), kSuites.end());
    } else if (std::find(kSuites.begin(), kSuites.end(), r) != kSuites.end()) {
      want.insert(r);
    } else {
      throw Error(ErrorKind::ConfigError, "unknown suite: " + r);
    }
  }
  std::vector<std::string> out;
  for (const auto& s : kSuites) {
    if (want.count(s)) out.push_back(s);
  }
  return out;
}

bool suite_is_homogeneous(const std::string& suite) { return suite != "qcomb" && suite != "rep-gate"; }

std::vector<Task> plan_suite(const std::string& suite, const PlanConfig& cfg) {
  if (cfg.q_sectors.empty()) throw Error(ErrorKind::ConfigError, "no charge sectors given");
  if (suite == "qcomb") return {QcombTask{cfg.n_param}};
  if (suite == "rep-gate") return plan_rep_gate(cfg);
  if (suite == "barred") return plan_barred(cfg);
  if (suite == "divpow") return plan_divpow(cfg);
  if (suite == "id1") return plan_id1(cfg);
  if (suite == "id2") return plan_id2(cfg);
  if (suite == "site") return plan_site(cfg);
  if (suite == "lemmas") return plan_lemmas(cfg);
  if (suite == "serre-nested") return plan_nested(cfg);
  throw Error(ErrorKind::ConfigError, "unknown suite: " + suite);
}

int max_divided_order(const std::vector<Task>& tasks) {
  int best = 1;
  for (const auto& task : tasks) {
    if (const auto* s = std::get_if<SpecTask>(&task)) {
      best = std::max(best, spec_max_order(s->spec));
    } else if (const auto* p = std::get_if<PhiAuditTask>(&task)) {
      best = std::max(best, p->order);
    } else if (const auto* r = std::get_if<ResidualMatchTask>(&task)) {
      best = std::max({best, spec_max_order(r->a), spec_max_order(r->b)});
    } else if (const auto* m = std::get_if<StatusMatchTask>(&task)) {
      best = std::max({best, spec_max_order(m->a), spec_max_order(m->b)});
    }
  }
  return best;
}

template <class S>
std::vector<IdentityCheck> run_task(const Task& task, OperatorStore<S>& store) {
  if (const auto* s = std::get_if<SpecTask>(&task)) {
    IdentityCheck c = evaluate(s->spec, store);
    if (s->wrap_sensitive && c.status == Status::Nonzero) {
      c.status = Status::Error;
      c.error = to_string(ErrorKind::WrapInconsistency);
      c.note = "relation fails where the shift wraps the clock index (residual entry " +
               std::to_string(c.witness->row) + "," + std::to_string(c.witness->col) + ")";
    }
    return {std::move(c)};
  }
  if (const auto* q = std::get_if<QcombTask>(&task)) return qcomb_suite(q->n_param);
  if (const auto* g = std::get_if<SiteGateTask>(&task)) {
    const StoreConfig& cfg = store.config();
    auto checks = rep_self_check(build_site_rep(cfg.backend, cfg.n_param, cfg.c), g->mode);
    for (auto& c : checks) c.params.emplace("ring", std::string(to_string(cfg.ring)));
    return checks;
  }
  if (const auto* c = std::get_if<ChainGateTask>(&task)) return run_chain_gate(*c, store);
  if (const auto* p = std::get_if<PhiAuditTask>(&task)) return {run_phi_audit(*p, store)};
  if (const auto* r = std::get_if<ResidualMatchTask>(&task)) return {run_residual_match(*r, store)};
  if (const auto* m = std::get_if<StatusMatchTask>(&task)) return {run_status_match(*m, store)};
  throw Error(ErrorKind::InternalInconsistency, "unhandled task kind");
}

template std::vector<IdentityCheck> run_task(const Task&, OperatorStore<LaurentPoly>&);
template std::vector<IdentityCheck> run_task(const Task&, OperatorStore<CycloElem>&);
template std::vector<IdentityCheck> run_task(const Task&, OperatorStore<Complex>&);

std::string task_label(const Task& task) {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, SpecTask>) {
          return t.spec.id + " " + display(t.spec.params);
        } else if constexpr (std::is_same_v<T, QcombTask>) {
          return "qcomb N=" + std::to_string(t.n_param);
        } else if constexpr (std::is_same_v<T, SiteGateTask>) {
          return t.mode == GateMode::generic ? "site gate (generic)" : "site gate (root of unity)";
        } else if constexpr (std::is_same_v<T, ChainGateTask>) {
          return "chain gate L=" + std::to_string(t.length);
        } else if constexpr (std::is_same_v<T, PhiAuditTask>) {
          return "phi_adic_audit " + t.op + "(" + std::to_string(t.order) + ")";
        } else {
          return t.id + " " + display(t.params);
        }
      },
      task);
}

std::string explain(const std::string& check_id) {
  const auto& table = catalog();
  auto it = table.find(check_id);
  if (it == table.end()) throw Error(ErrorKind::UnknownId, "no identity with id '" + check_id + "'");
  std::string out = check_id + "\n  formula: " + it->second.formula + "\n";
  if (!it->second.regime.empty()) out += "  regime:  " + it->second.regime + "\n";
  return out;
}

std::vector<std::string> explainable_ids() {
  std::vector<std::string> out;
  for (const auto& [id, entry] : catalog()) out.push_back(id);
  return out;
}

}  // namespace qloop
