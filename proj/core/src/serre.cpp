#include "qloop/serre.hpp"

#include "qloop/errors.hpp"

namespace qloop {

namespace {

LaurentPoly signed_q(int sign_exp, int q_exp) {
  LaurentPoly p = LaurentPoly::q(q_exp);
  return (sign_exp % 2 != 0) ? -p : p;
}

Term make_term(LaurentPoly coeff, std::vector<OpKey> factors) {
  Term t{std::move(coeff), {}};
  for (auto& f : factors) {
    if (f.order != 0) t.factors.push_back(std::move(f));
  }
  return t;
}

OpKey dp(const std::string& op, Norm norm, int n) { return OpKey{op, norm, n}; }

struct Letters {
  std::string b, c;
  Norm norm;
};

Letters pm_letters(Sign s) { return s == Sign::plus ? Letters{"E0", "E1", Norm::q_fact} : Letters{"F1", "F0", Norm::q_fact}; }
Letters site_letters(Side s) {
  return s == Side::one_zero ? Letters{"B1", "C0", Norm::omega_fact} : Letters{"BL", "CL1", Norm::omega_fact};
}

// x^(2N+Q) y^(Q) + s x^(N+Q) y^(Q) x^(N) + x^(Q) y^(Q) x^(2N)
std::vector<Term> three_term(const std::string& x, const std::string& y, Norm norm, int q, int n, int middle_sign) {
  return {
      make_term(1, {dp(x, norm, 2 * n + q), dp(y, norm, q)}),
      make_term(middle_sign, {dp(x, norm, n + q), dp(y, norm, q), dp(x, norm, n)}),
      make_term(1, {dp(x, norm, q), dp(y, norm, q), dp(x, norm, 2 * n)}),
  };
}

// x^(N+Q) y^(Q) x^(Q) - x^(Q) y^(Q) x^(N+Q)
std::vector<Term> exchange(const std::string& x, const std::string& y, Norm norm, int q, int n) {
  return {
      make_term(1, {dp(x, norm, n + q), dp(y, norm, q), dp(x, norm, q)}),
      make_term(-1, {dp(x, norm, q), dp(y, norm, q), dp(x, norm, n + q)}),
  };
}

// sum_k (-1)^k x^(3N+Q-kN) y^(N+Q) x^(kN+Q), k = 0..3
std::vector<Term> four_term(const std::string& x, const std::string& y, Norm norm, int q, int n) {
  std::vector<Term> out;
  for (int k = 0; k <= 3; ++k) {
    out.push_back(make_term(k % 2 ? -1 : 1, {dp(x, norm, 3 * n + q - k * n), dp(y, norm, n + q), dp(x, norm, k * n + q)}));
  }
  return out;
}

ParamRecord sector_params(int q, const std::string& key, const std::string& value) {
  return {{"Q", static_cast<long long>(q)}, {key, value}};
}

void require_sector(int q, int n_param) {
  if (q < 0 || q >= n_param) throw Error(ErrorKind::InvalidParams, "Q must lie in 0..N-1");
}

std::vector<OpKey> concat(std::initializer_list<std::vector<OpKey>> parts) {
  std::vector<OpKey> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

const char* to_string(Pair p) {
  switch (p) {
    case Pair::E0_E1: return "E0_E1";
    case Pair::E1_E0: return "E1_E0";
    case Pair::F1_F0: return "F1_F0";
    case Pair::F0_F1: return "F0_F1";
  }
  return "E0_E1";
}

std::pair<std::string, std::string> pair_ops(Pair p) {
  switch (p) {
    case Pair::E0_E1: return {"E0", "E1"};
    case Pair::E1_E0: return {"E1", "E0"};
    case Pair::F1_F0: return {"F1", "F0"};
    case Pair::F0_F1: return {"F0", "F1"};
  }
  return {"E0", "E1"};
}

std::vector<Pair> all_pairs() { return {Pair::E0_E1, Pair::E1_E0, Pair::F1_F0, Pair::F0_F1}; }

const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }
const char* to_string(Side s) { return s == Side::one_zero ? "one_zero" : "L_Lm1"; }

Regime dispatch_regime(int n, int m, int n_param) {
  const int d = m - 2 * n;
  if (d <= 0) return Regime::none;
  return d >= n_param ? Regime::id1 : Regime::id2;
}

std::vector<Term> lusztig_f_terms(const std::string& ti, const std::string& tj, int n, int m, Norm norm) {
  std::vector<Term> out;
  for (int r = 0; r <= m; ++r) {
    out.push_back(make_term(signed_q(r, r * (2 * n - m + 1)), {dp(ti, norm, r), dp(tj, norm, n), dp(ti, norm, m - r)}));
  }
  return out;
}

IdentitySpec higher_serre_spec(int n, int m, Pair pair) {
  if (n < 0 || m <= 2 * n) throw Error(ErrorKind::InvalidRegime, "f_{n,m} = 0 is claimed only for m > 2n");
  const auto [ti, tj] = pair_ops(pair);
  IdentitySpec s;
  s.id = "higher_serre";
  s.anchor = "f_{n,m} = sum_{r+s=m} (-1)^r q^{r(2n-m+1)} ti^(r) tj^(n) ti^(s) = 0 for m > 2n";
  s.params = {{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}, {"pair", std::string(to_string(pair))}};
  s.terms = lusztig_f_terms(ti, tj, n, m, Norm::q_fact);
  return s;
}

IdentitySpec id1_spec(int n, int m, Pair pair, int n_param) {
  if (dispatch_regime(n, m, n_param) != Regime::id1) {
    throw Error(ErrorKind::InvalidRegime, "id1 requires m - 2n >= N");
  }
  const auto [ti, tj] = pair_ops(pair);
  IdentitySpec s;
  s.id = "id1";
  s.anchor = "ti^(m) tj^(n) + sum_{k=1}^{floor(m/N)} (-1)^{k(N+m-1)} ti^(m-kN) tj^(n) ti^(kN) = 0, m-2n >= N";
  s.params = {{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}, {"pair", std::string(to_string(pair))}};
  s.root_only = true;
  s.terms.push_back(make_term(1, {dp(ti, Norm::q_fact, m), dp(tj, Norm::q_fact, n)}));
  for (int k = 1; k <= m / n_param; ++k) {
    s.terms.push_back(make_term(signed_q(k * (n_param + m - 1), 0),
                                {dp(ti, Norm::q_fact, m - k * n_param), dp(tj, Norm::q_fact, n),
                                 dp(ti, Norm::q_fact, k * n_param)}));
  }
  return s;
}

IdentitySpec bcn_spec(int q, int n_param, Sign sign) {
  require_sector(q, n_param);
  const Letters l = pm_letters(sign);
  IdentitySpec s;
  s.id = "bcn";
  s.anchor = "B^(2N+Q) C^(Q) + (-1)^(N+Q-1) B^(N+Q) C^(Q) B^(N) + B^(Q) C^(Q) B^(2N) = 0";
  s.params = sector_params(q, "branch", to_string(sign));
  s.root_only = true;
  s.terms = three_term(l.b, l.c, l.norm, q, n_param, (n_param + q - 1) % 2 ? -1 : 1);
  return s;
}

IdentitySpec cbn_spec(int q, int n_param, Sign sign) {
  require_sector(q, n_param);
  const Letters l = pm_letters(sign);
  IdentitySpec s;
  s.id = "cbn";
  s.anchor = "C^(2N+Q) B^(Q) + (-1)^(N+Q-1) C^(N+Q) B^(Q) C^(N) + C^(Q) B^(Q) C^(2N) = 0";
  s.params = sector_params(q, "branch", to_string(sign));
  s.root_only = true;
  s.terms = three_term(l.c, l.b, l.norm, q, n_param, (n_param + q - 1) % 2 ? -1 : 1);
  return s;
}

IdentitySpec id2_spec(int n, int m, Pair pair, int n_param) {
  if (dispatch_regime(n, m, n_param) != Regime::id2) {
    throw Error(ErrorKind::InvalidRegime, "id2 requires 1 <= m - 2n <= N - 1");
  }
  const auto [ti, tj] = pair_ops(pair);
  IdentitySpec s;
  s.id = "id2";
  s.anchor = "sum_{k=0}^{floor(m/N)} (-1)^k ti^(m-kN) tj^(n) ti^(kN+N-m+2n) = 0, 1 <= m-2n <= N-1";
  s.params = {{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}, {"pair", std::string(to_string(pair))}};
  s.root_only = true;
  for (int k = 0; k <= m / n_param; ++k) {
    s.terms.push_back(make_term(k % 2 ? -1 : 1, {dp(ti, Norm::q_fact, m - k * n_param), dp(tj, Norm::q_fact, n),
                                                 dp(ti, Norm::q_fact, k * n_param + n_param - m + 2 * n)}));
  }
  return s;
}

IdentitySpec wrap_vanish_spec(int k, int p, int n, int m, const std::string& ti, int n_param) {
  const int d = m - 2 * n;
  if (d < 1 || d > n_param - 1 || p < d || p > n_param - 1 || k < 0) {
    throw Error(ErrorKind::InvalidRegime, "needs 1 <= m-2n <= p <= N-1");
  }
  IdentitySpec s;
  s.id = "wrap_vanish";
  s.anchor = "ti^(kN+p) ti^(N-m+2n) = [kN+N+p-m+2n, N-m+2n]_q ti^(kN+N+p-m+2n) = 0 for 1 <= m-2n <= p <= N-1";
  s.params = {{"k", static_cast<long long>(k)},
              {"p", static_cast<long long>(p)},
              {"n", static_cast<long long>(n)},
              {"m", static_cast<long long>(m)},
              {"op", ti}};
  s.root_only = true;
  s.terms.push_back(make_term(1, {dp(ti, Norm::q_fact, k * n_param + p), dp(ti, Norm::q_fact, n_param - d)}));
  s.support.push_back(make_term(1, {dp(ti, Norm::q_fact, k * n_param + n_param + p - d)}));
  return s;
}

IdentitySpec bcb_spec(int q, int n_param, Sign sign) {
  require_sector(q, n_param);
  const Letters l = pm_letters(sign);
  IdentitySpec s;
  s.id = "bcb";
  s.anchor = "B^(N+Q) C^(Q) B^(Q) = B^(Q) C^(Q) B^(N+Q)";
  s.params = sector_params(q, "branch", to_string(sign));
  s.root_only = true;
  s.terms = exchange(l.b, l.c, l.norm, q, n_param);
  return s;
}

IdentitySpec cbc_spec(int q, int n_param, Sign sign) {
  require_sector(q, n_param);
  const Letters l = pm_letters(sign);
  IdentitySpec s;
  s.id = "cbc";
  s.anchor = "C^(N+Q) B^(Q) C^(Q) = C^(Q) B^(Q) C^(N+Q)";
  s.params = sector_params(q, "branch", to_string(sign));
  s.root_only = true;
  s.terms = exchange(l.c, l.b, l.norm, q, n_param);
  return s;
}

IdentitySpec bcbc_spec(int q, int n_param, Sign sign) {
  require_sector(q, n_param);
  const Letters l = pm_letters(sign);
  IdentitySpec s;
  s.id = "bcbc";
  s.anchor = "sum_{k=0}^{3} (-1)^k B^(3N+Q-kN) C^(N+Q) B^(kN+Q) = 0";
  s.params = sector_params(q, "branch", to_string(sign));
  s.root_only = true;
  s.terms = four_term(l.b, l.c, l.norm, q, n_param);
  return s;
}

IdentitySpec cbcb_spec(int q, int n_param, Sign sign) {
  require_sector(q, n_param);
  const Letters l = pm_letters(sign);
  IdentitySpec s;
  s.id = "cbcb";
  s.anchor = "sum_{k=0}^{3} (-1)^k C^(3N+Q-kN) B^(N+Q) C^(kN+Q) = 0";
  s.params = sector_params(q, "branch", to_string(sign));
  s.root_only = true;
  s.terms = four_term(l.c, l.b, l.norm, q, n_param);
  return s;
}

IdentitySpec g_form_spec(int n, int m, Pair pair, int n_param, Branch branch) {
  const auto [ti, tj] = pair_ops(pair);
  const int l_max = branch == Branch::full ? n_param - 1 : m - 2 * n - 1;
  IdentitySpec s;
  s.id = branch == Branch::full ? "g_form_full" : "g_form_truncated";
  s.anchor = "sum_l (-1)^l q^{l(1-m)} f_{n,m-l} ti^(l) = sum_s c_s ti^(m-s) tj^(n) ti^(s)";
  s.params = {{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}, {"pair", std::string(to_string(pair))}};
  for (int l = 0; l <= l_max && l <= m; ++l) {
    for (int r = 0; r <= m - l; ++r) {
      s.terms.push_back(make_term(signed_q(l + r, l * (1 - m) + r * (2 * n - m + l + 1)),
                                  {dp(ti, Norm::q_fact, r), dp(tj, Norm::q_fact, n), dp(ti, Norm::q_fact, m - l - r),
                                   dp(ti, Norm::q_fact, l)}));
    }
  }
  for (int sidx = 0; sidx <= m; ++sidx) {
    LaurentPoly c = c_coefficient_poly(sidx, n, m, n_param, branch);
    if (c.is_zero()) continue;
    s.terms.push_back(make_term(-c, {dp(ti, Norm::q_fact, m - sidx), dp(tj, Norm::q_fact, n), dp(ti, Norm::q_fact, sidx)}));
  }
  return s;
}

IdentitySpec g_zero_spec(int n, int m, Pair pair, int n_param, Branch branch) {
  const int d = m - 2 * n;
  if (branch == Branch::full ? d < n_param : d < 1) {
    throw Error(ErrorKind::InvalidRegime,
                branch == Branch::full ? "full-branch g vanishes for m - 2n >= N" : "truncated g vanishes for m > 2n");
  }
  const auto [ti, tj] = pair_ops(pair);
  IdentitySpec s;
  s.id = branch == Branch::full ? "g_zero_full" : "g_zero_truncated";
  s.anchor = "sum_s c_s ti^(m-s) tj^(n) ti^(s) = 0";
  s.params = {{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}, {"pair", std::string(to_string(pair))}};
  for (int sidx = 0; sidx <= m; ++sidx) {
    LaurentPoly c = c_coefficient_poly(sidx, n, m, n_param, branch);
    if (c.is_zero()) continue;
    s.terms.push_back(make_term(c, {dp(ti, Norm::q_fact, m - sidx), dp(tj, Norm::q_fact, n), dp(ti, Norm::q_fact, sidx)}));
  }
  return s;
}

std::vector<IdentitySpec> site_specs(int q, int n_param, Side side) {
  require_sector(q, n_param);
  const Letters l = site_letters(side);
  const std::string side_name = to_string(side);
  auto spec = [&](std::string id, std::string anchor, std::vector<Term> terms) {
    IdentitySpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.params = sector_params(q, "side", side_name);
    s.root_only = true;
    s.terms = std::move(terms);
    return s;
  };
  return {
      spec("site_bcn", "B^(2N+Q) C^(Q) - B^(N+Q) C^(Q) B^(N) + B^(Q) C^(Q) B^(2N) = 0 (barred, omega-normalised)",
           three_term(l.b, l.c, l.norm, q, n_param, -1)),
      spec("site_cbn", "C^(2N+Q) B^(Q) - C^(N+Q) B^(Q) C^(N) + C^(Q) B^(Q) C^(2N) = 0 (barred, omega-normalised)",
           three_term(l.c, l.b, l.norm, q, n_param, -1)),
      spec("site_bcb", "B^(N+Q) C^(Q) B^(Q) = B^(Q) C^(Q) B^(N+Q) (barred)", exchange(l.b, l.c, l.norm, q, n_param)),
      spec("site_cbc", "C^(N+Q) B^(Q) C^(Q) = C^(Q) B^(Q) C^(N+Q) (barred)", exchange(l.c, l.b, l.norm, q, n_param)),
      spec("site_bcbc", "sum_{k=0}^{3} (-1)^k B^(3N+Q-kN) C^(N+Q) B^(kN+Q) = 0 (barred)",
           four_term(l.b, l.c, l.norm, q, n_param)),
      spec("site_cbcb", "sum_{k=0}^{3} (-1)^k C^(3N+Q-kN) B^(N+Q) C^(kN+Q) = 0 (barred)",
           four_term(l.c, l.b, l.norm, q, n_param)),
  };
}

std::vector<IdentitySpec> site_origin_specs(int q, int n_param, Side side) {
  const Sign sign = side == Side::one_zero ? Sign::plus : Sign::minus;
  return {bcn_spec(q, n_param, sign),  cbn_spec(q, n_param, sign),  bcb_spec(q, n_param, sign),
          cbc_spec(q, n_param, sign),  bcbc_spec(q, n_param, sign), cbcb_spec(q, n_param, sign)};
}

LoopGenerators build_loop_generators(int q, int n_param) {
  require_sector(q, n_param);
  LoopGenerators g;
  g.q_sector = q;
  auto word = [](std::vector<OpKey> f) {
    std::vector<OpKey> out;
    for (auto& k : f) {
      if (k.order != 0) out.push_back(std::move(k));
    }
    return out;
  };
  g.x_minus = word({dp_omega("C0", q), dp_omega("B1", n_param + q)});
  g.x_plus = word({dp_omega("C0", n_param + q), dp_omega("B1", q)});
  g.xbar_minus = word({dp_omega("BL", n_param + q), dp_omega("CL1", q)});
  g.xbar_plus = word({dp_omega("BL", q), dp_omega("CL1", n_param + q)});
  return g;
}

std::vector<IdentitySpec> lemma_specs(int q, int n_param) {
  require_sector(q, n_param);
  const int n = n_param;
  const LoopGenerators g = build_loop_generators(q, n);
  const auto& xm = g.x_minus;
  const auto& xp = g.x_plus;
  auto C = [&](int k) { return std::vector<OpKey>{dp_omega("C0", k)}; };
  auto B = [&](int k) { return std::vector<OpKey>{dp_omega("B1", k)}; };
  // C^(a1) B^(b1) C^(a2) B^(b2) ...
  auto cb = [&](std::initializer_list<int> orders) {
    std::vector<OpKey> out;
    bool c_turn = true;
    for (int k : orders) {
      auto part = c_turn ? C(k) : B(k);
      out.insert(out.end(), part.begin(), part.end());
      c_turn = !c_turn;
    }
    return out;
  };
  auto strip = [](std::vector<OpKey> f) {
    std::vector<OpKey> out;
    for (auto& k : f) {
      if (k.order != 0) out.push_back(std::move(k));
    }
    return out;
  };
  auto spec = [&](std::string id, std::string anchor, std::vector<OpKey> lhs, long long coeff, std::vector<OpKey> rhs) {
    IdentitySpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.params = {{"Q", static_cast<long long>(q)}};
    s.root_only = true;
    s.terms.push_back(Term{LaurentPoly(1), strip(std::move(lhs))});
    s.terms.push_back(Term{LaurentPoly(BigInt(-coeff)), strip(std::move(rhs))});
    return s;
  };
  const int Q = q;
  std::vector<IdentitySpec> out;
  out.push_back(spec("lemma_xpxm_right", "x+ x- = C^(Q) B^(Q) C^(N+Q) B^(N+Q)", concat({xp, xm}), 1,
                     cb({Q, Q, n + Q, n + Q})));
  out.push_back(spec("lemma_xpxm_left", "x+ x- = C^(N+Q) B^(N+Q) C^(Q) B^(Q)", concat({xp, xm}), 1,
                     cb({n + Q, n + Q, Q, Q})));
  out.push_back(spec("lemma_commute", "[C^(Q) B^(Q), C^(N+Q) B^(N+Q)] = 0", cb({Q, Q, n + Q, n + Q}), 1,
                     cb({n + Q, n + Q, Q, Q})));
  out.push_back(spec("lemma_xm_sq_a", "(x-)^2 = 2 C^(Q) B^(Q) C^(Q) B^(2N+Q)", concat({xm, xm}), 2,
                     cb({Q, Q, Q, 2 * n + Q})));
  out.push_back(spec("lemma_xm_sq_b", "(x-)^2 = 2 C^(Q) B^(2N+Q) C^(Q) B^(Q)", concat({xm, xm}), 2,
                     cb({Q, 2 * n + Q, Q, Q})));
  out.push_back(spec("lemma_cb_swap", "C^(Q) B^(Q) C^(Q) B^(2N+Q) = C^(Q) B^(2N+Q) C^(Q) B^(Q)",
                     cb({Q, Q, Q, 2 * n + Q}), 1, cb({Q, 2 * n + Q, Q, Q})));
  out.push_back(spec("lemma_xp_xm3_partial",
                     "x+ (x-)^3 = 2 C^(Q) B^(Q) C^(N+Q) B^(N+Q) C^(Q) B^(Q) C^(Q) B^(Q) B^(2N)",
                     concat({xp, xm, xm, xm}), 2, concat({cb({Q, Q, n + Q, n + Q, Q, Q, Q, Q}), B(2 * n)})));
  out.push_back(spec("lemma_xp_xm3", "x+ (x-)^3 = 6 C^(Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(Q) C^(N+Q) B^(3N+Q)",
                     concat({xp, xm, xm, xm}), 6, cb({Q, Q, Q, Q, Q, Q, n + Q, 3 * n + Q})));
  out.push_back(spec("lemma_xm_xp_xm2_a",
                     "x- x+ (x-)^2 = 2 C^(Q) B^(Q) C^(Q) B^(N+Q) C^(N+Q) B^(Q) C^(Q) B^(2N+Q)",
                     concat({xm, xp, xm, xm}), 2, cb({Q, Q, Q, n + Q, n + Q, Q, Q, 2 * n + Q})));
  out.push_back(spec("lemma_xm_xp_xm2_b",
                     "x- x+ (x-)^2 = 2 C^(Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(N+Q) C^(N+Q) B^(2N+Q)",
                     concat({xm, xp, xm, xm}), 2, cb({Q, Q, Q, Q, Q, n + Q, n + Q, 2 * n + Q})));
  out.push_back(spec("lemma_xm2_xp_xm",
                     "(x-)^2 x+ x- = 2 C^(Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(2N+Q) C^(N+Q) B^(N+Q)",
                     concat({xm, xm, xp, xm}), 2, cb({Q, Q, Q, Q, Q, 2 * n + Q, n + Q, n + Q})));
  out.push_back(spec("lemma_xm3_xp", "(x-)^3 x+ = 6 C^(Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(3N+Q) C^(N+Q) B^(Q)",
                     concat({xm, xm, xm, xp}), 6, cb({Q, Q, Q, Q, Q, 3 * n + Q, n + Q, Q})));
  out.push_back(spec("lemma_xm_xp3", "x- (x+)^3 = 6 C^(Q) B^(N+Q) C^(3N+Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(Q)",
                     concat({xm, xp, xp, xp}), 6, cb({Q, n + Q, 3 * n + Q, Q, Q, Q, Q, Q})));
  out.push_back(spec("lemma_xp_xm_xp2",
                     "x+ x- (x+)^2 = 2 C^(N+Q) B^(N+Q) C^(2N+Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(Q)",
                     concat({xp, xm, xp, xp}), 2, cb({n + Q, n + Q, 2 * n + Q, Q, Q, Q, Q, Q})));
  out.push_back(spec("lemma_xp2_xm_xp",
                     "(x+)^2 x- x+ = 2 C^(2N+Q) B^(N+Q) C^(N+Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(Q)",
                     concat({xp, xp, xm, xp}), 2, cb({2 * n + Q, n + Q, n + Q, Q, Q, Q, Q, Q})));
  out.push_back(spec("lemma_xp3_xm", "(x+)^3 x- = 6 C^(3N+Q) B^(N+Q) C^(Q) B^(Q) C^(Q) B^(Q) C^(Q) B^(Q)",
                     concat({xp, xp, xp, xm}), 6, cb({3 * n + Q, n + Q, Q, Q, Q, Q, Q, Q})));
  return out;
}

std::vector<IdentitySpec> nested_specs(int q, int n_param, const std::string& family) {
  const LoopGenerators g = build_loop_generators(q, n_param);
  std::vector<IdentitySpec> out;
  auto spec = [&](std::string id, std::string anchor, const std::vector<OpKey>& a, const std::vector<OpKey>& b) {
    IdentitySpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.params = {{"Q", static_cast<long long>(q)}};
    s.root_only = true;
    s.terms = substitute_words(expand_nested_commutator(0, 1, 3), {a, b});
    return s;
  };
  if (family == "x") {
    out.push_back(spec("nested_x_minus", "[[[x+, x-], x-], x-] = 0", g.x_plus, g.x_minus));
    out.push_back(spec("nested_x_plus", "[[[x-, x+], x+], x+] = 0", g.x_minus, g.x_plus));
  } else if (family == "xbar") {
    out.push_back(spec("nested_xbar_plus", "[[[xbar-, xbar+], xbar+], xbar+] = 0", g.xbar_minus, g.xbar_plus));
    out.push_back(spec("nested_xbar_minus", "[[[xbar+, xbar-], xbar-], xbar-] = 0", g.xbar_plus, g.xbar_minus));
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown generator family: " + family);
  }
  return out;
}

IdentitySpec power_factorial_spec(const std::string& op, int n, Norm norm) {
  IdentitySpec s;
  s.id = "power_factorial";
  s.anchor = norm == Norm::q_fact ? "[n]_q! theta^(n) = theta^n" : "[n]! theta^(n) = theta^n";
  s.params = {{"op", op}, {"n", static_cast<long long>(n)}, {"norm", std::string(to_string(norm))}};
  s.terms.push_back(make_term(norm_factorial(n, norm), {dp(op, norm, n)}));
  s.terms.push_back(make_term(-1, {OpKey{op, Norm::none, n}}));
  return s;
}

IdentitySpec nilpotent_spec(const std::string& op, int n, Norm norm) {
  IdentitySpec s;
  s.id = "nilpotent";
  s.anchor = "theta^(n) = 0 beyond the nilpotency order; support theta^(n-1) != 0";
  s.params = {{"op", op}, {"n", static_cast<long long>(n)}, {"norm", std::string(to_string(norm))}};
  s.terms.push_back(make_term(1, {dp(op, norm, n)}));
  s.support.push_back(make_term(1, {dp(op, norm, n - 1)}));
  return s;
}

IdentitySpec norm_ratio_spec(const std::string& op, int n) {
  IdentitySpec s;
  s.id = "norm_ratio";
  s.anchor = "theta^n/[n]_q! = q^{n(n-1)/2} theta^n/[n]!";
  s.params = {{"op", op}, {"n", static_cast<long long>(n)}};
  s.terms.push_back(make_term(1, {dp(op, Norm::q_fact, n)}));
  s.terms.push_back(make_term(-LaurentPoly::q(n * (n - 1) / 2), {dp(op, Norm::omega_fact, n)}));
  return s;
}

IdentitySpec mulo_spec(int k, int j, int q, int n_param, const std::string& op) {
  require_sector(q, n_param);
  if (k < 0 || j < 0) throw Error(ErrorKind::InvalidParams, "k and j must be non-negative");
  IdentitySpec s;
  s.id = "mulo";
  s.anchor = "B^(kN+Q) B^(jN) = binom(k+j, k) B^(kN+jN+Q) (omega-normalised)";
  s.params = {{"Q", static_cast<long long>(q)}, {"k", static_cast<long long>(k)}, {"j", static_cast<long long>(j)},
              {"op", op}};
  s.root_only = true;
  s.terms.push_back(make_term(1, {dp_omega(op, k * n_param + q), dp_omega(op, j * n_param)}));
  s.terms.push_back(make_term(LaurentPoly(-binomial(static_cast<unsigned>(k + j), static_cast<unsigned>(k))),
                              {dp_omega(op, (k + j) * n_param + q)}));
  return s;
}

IdentitySpec cross_norm_spec(const std::string& which, int n, int length) {
  IdentitySpec s;
  s.id = "cross_norm_" + which;
  s.params = {{"n", static_cast<long long>(n)}};
  const OpKey half_inv_n{"Ahalf_inv", Norm::none, n};
  const int sgn = n % 2;
  if (which == "Cminus") {
    s.anchor = "C-^(n) = (-1)^n A^{-n/2} CL1^(n)";
    s.terms = {make_term(1, {dp_q("F0", n)}), make_term(signed_q(sgn + 1, 0), {half_inv_n, dp_omega("CL1", n)})};
  } else if (which == "Bminus") {
    s.anchor = "B-^(n) = BL^(n) A^{-n/2}";
    s.terms = {make_term(1, {dp_q("F1", n)}), make_term(-1, {dp_omega("BL", n), half_inv_n})};
  } else if (which == "Cplus") {
    s.anchor = "C+^(n) = (-1)^n q^{n(1-L)} A^{-n/2} C0^(n)";
    s.terms = {make_term(1, {dp_q("E1", n)}),
               make_term(signed_q(sgn + 1, n * (1 - length)), {half_inv_n, dp_omega("C0", n)})};
  } else if (which == "Bplus") {
    s.anchor = "B+^(n) = q^{n(1-L)} B1^(n) A^{-n/2}";
    s.terms = {make_term(1, {dp_q("E0", n)}), make_term(-LaurentPoly::q(n * (1 - length)), {dp_omega("B1", n), half_inv_n})};
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown cross-normalisation relation: " + which);
  }
  return s;
}

IdentitySpec half_commute_spec(const std::string& which) {
  IdentitySpec s;
  s.id = "half_commute_" + which;
  const OpKey hi = base("Ahalf_inv");
  if (which == "C0" || which == "CL1") {
    s.anchor = "A^{-1/2} C = q C A^{-1/2}";
    s.terms = {make_term(1, {hi, base(which)}), make_term(-LaurentPoly::q(1), {base(which), hi})};
  } else if (which == "B1" || which == "BL") {
    s.anchor = "B A^{-1/2} = q A^{-1/2} B";
    s.terms = {make_term(1, {base(which), hi}), make_term(-LaurentPoly::q(1), {hi, base(which)})};
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown barred operator: " + which);
  }
  return s;
}

std::vector<IdentitySpec> chain_gate_specs() {
  std::vector<IdentitySpec> out;
  auto spec = [&](std::string id, std::string anchor, std::vector<Term> terms) {
    IdentitySpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.terms = std::move(terms);
    out.push_back(std::move(s));
  };
  const LaurentPoly qq = LaurentPoly::q(1) - LaurentPoly::q(-1);
  spec("chain.K_E1", "K E1 K^-1 = q^2 E1",
       {make_term(1, {base("K"), base("E1")}), make_term(-LaurentPoly::q(2), {base("E1"), base("K")})});
  spec("chain.K_E0", "K E0 K^-1 = q^-2 E0",
       {make_term(1, {base("K"), base("E0")}), make_term(-LaurentPoly::q(-2), {base("E0"), base("K")})});
  spec("chain.K_F1", "K F1 K^-1 = q^-2 F1",
       {make_term(1, {base("K"), base("F1")}), make_term(-LaurentPoly::q(-2), {base("F1"), base("K")})});
  spec("chain.K_F0", "K F0 K^-1 = q^2 F0",
       {make_term(1, {base("K"), base("F0")}), make_term(-LaurentPoly::q(2), {base("F0"), base("K")})});
  spec("chain.E1_F1", "(q - q^-1)[E1, F1] = K - K^-1",
       {make_term(qq, {base("E1"), base("F1")}), make_term(-qq, {base("F1"), base("E1")}), make_term(-1, {base("K")}),
        make_term(1, {base("Kinv")})});
  spec("chain.E0_F0", "(q - q^-1)[E0, F0] = K^-1 - K",
       {make_term(qq, {base("E0"), base("F0")}), make_term(-qq, {base("F0"), base("E0")}),
        make_term(-1, {base("Kinv")}), make_term(1, {base("K")})});
  spec("chain.E1_F0", "[E1, F0] = 0", {make_term(1, {base("E1"), base("F0")}), make_term(-1, {base("F0"), base("E1")})});
  spec("chain.E0_F1", "[E0, F1] = 0", {make_term(1, {base("E0"), base("F1")}), make_term(-1, {base("F1"), base("E0")})});
  spec("chain.K_Kinv", "K K^-1 = 1", {make_term(1, {base("K"), base("Kinv")}), make_term(-1, {})});
  spec("chain.half_square", "A^{1/2} A^{1/2} = A",
       {make_term(1, {base("Ahalf"), base("Ahalf")}), make_term(-1, {base("A")})});
  for (const char* op : {"E0", "E1", "F0", "F1", "B1", "BL", "C0", "CL1"}) {
    const int c = expected_charge(op);
    spec(std::string("chain.grading_") + op, "A X A^-1 = omega^{c(X)} X",
         {make_term(1, {base("A"), base(op), base("Ainv")}), make_term(-LaurentPoly::q(2 * c), {base(op)})});
  }
  return out;
}

}  // namespace qloop
