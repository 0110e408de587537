#include "qloop/qcomb.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <tuple>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

// Memo for factorials and Pascal binomials. Values are immutable once inserted,
// so the lock only guards the maps themselves.
class QFactorialTable {
 public:
  static QFactorialTable& instance() {
    static QFactorialTable table;
    return table;
  }

  LaurentPoly factorial(int n, Flavor flavor) {
    {
      std::lock_guard lock(mu_);
      auto it = factorials_.find({n, flavor});
      if (it != factorials_.end()) return it->second;
    }
    LaurentPoly v(1);
    for (int i = 1; i <= n; ++i) v = v * (flavor == Flavor::q ? q_int(i) : omega_int(i));
    std::lock_guard lock(mu_);
    return factorials_.emplace(std::make_pair(n, flavor), std::move(v)).first->second;
  }

  LaurentPoly binomial(int s, int l, Flavor flavor) {
    if (l < 0 || l > s) return {};
    if (l == 0 || l == s) return LaurentPoly(1);
    {
      std::lock_guard lock(mu_);
      auto it = binomials_.find({s, l, flavor});
      if (it != binomials_.end()) return it->second;
    }
    LaurentPoly v;
    if (flavor == Flavor::q) {
      // [s, l] = q^l [s-1, l] + q^-(s-l) [s-1, l-1]
      v = binomial(s - 1, l, flavor).shifted(l) + binomial(s - 1, l - 1, flavor).shifted(-(s - l));
    } else {
      // [s, l]_w = [s-1, l-1]_w + w^l [s-1, l]_w
      v = binomial(s - 1, l - 1, flavor) + binomial(s - 1, l, flavor).shifted(2 * l);
    }
    std::lock_guard lock(mu_);
    return binomials_.emplace(std::make_tuple(s, l, flavor), std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, Flavor>, LaurentPoly> factorials_;
  std::map<std::tuple<int, int, Flavor>, LaurentPoly> binomials_;
};

LaurentPoly sign_power(int exponent_of_minus_one) {
  return LaurentPoly(exponent_of_minus_one % 2 == 0 ? 1 : -1);
}

LaurentPoly cyclotomic_as_laurent(int n_param) {
  const auto& ring = CyclotomicRing::get(n_param);
  return LaurentPoly::from_dense(0, ring.modulus());
}

IdentityCheck scalar_check(std::string id, std::string anchor, ParamRecord params, bool holds,
                           const std::string& residual, std::chrono::steady_clock::time_point start) {
  IdentityCheck c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.params = std::move(params);
  c.status = holds ? Status::ExactZero : Status::Nonzero;
  if (!holds) c.witness = EntryWitness{0, 0, residual, -1};
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace

LaurentPoly q_int(int n) {
  if (n == 0) return {};
  if (n < 0) return -q_int(-n);
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < n; ++i) terms.emplace_back(n - 1 - 2 * i, BigInt(1));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly omega_int(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "omega integer needs n >= 0");
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < n; ++i) terms.emplace_back(2 * i, BigInt(1));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly factorial(int n, Flavor flavor) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "factorial needs n >= 0");
  return QFactorialTable::instance().factorial(n, flavor);
}

LaurentPoly q_factorial(int n) { return factorial(n, Flavor::q); }

LaurentPoly omega_factorial(int n, int /*n_param*/) { return factorial(n, Flavor::omega); }

LaurentPoly gauss_binomial(int s, int l, Flavor flavor) {
  if (s < 0) throw Error(ErrorKind::InvalidParams, "Gaussian binomial needs s >= 0");
  return QFactorialTable::instance().binomial(s, l, flavor);
}

LaurentPoly gauss_binomial_by_ratio(int s, int l, Flavor flavor) {
  if (l < 0 || l > s) return {};
  const LaurentPoly den = factorial(l, flavor) * factorial(s - l, flavor);
  auto quot = LaurentPoly::divide_exact(factorial(s, flavor), den);
  if (!quot) throw Error(ErrorKind::InternalInconsistency, "factorial ratio is not a Laurent polynomial");
  return *quot;
}

int phi_valuation(const LaurentPoly& p, int n_param) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidParams, "valuation of zero");
  const LaurentPoly phi = cyclotomic_as_laurent(n_param);
  int v = 0;
  LaurentPoly cur = p;
  while (auto next = LaurentPoly::divide_exact(cur, phi)) {
    cur = std::move(*next);
    ++v;
  }
  return v;
}

LaurentPoly c_coefficient_poly(int s, int n, int m, int n_param, Branch branch) {
  if (s < 0 || s > m) throw Error(ErrorKind::InvalidParams, "c_s needs 0 <= s <= m");
  const int l_max = branch == Branch::full ? n_param - 1 : m - 2 * n - 1;
  LaurentPoly acc;
  for (int l = 0; l <= l_max; ++l) {
    const LaurentPoly b = gauss_binomial(s, l, Flavor::q);
    if (b.is_zero()) continue;
    acc += sign_power(l + m - s) * b.shifted(l * (1 - s) + (m - s) * (2 * n - m + 1));
  }
  return acc;
}

CycloElem c_coefficient(int s, int n, int m, int n_param, Branch branch) {
  return CycloElem::reduce(CyclotomicRing::get(n_param), c_coefficient_poly(s, n, m, n_param, branch));
}

IdentityCheck check_q_omega_factorial_relation(int n, int n_param) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ring = CyclotomicRing::get(n_param);
  const CycloElem lhs = CycloElem::reduce(ring, q_factorial(n));
  const LaurentPoly rhs_poly = omega_factorial(n).shifted(-(n * (n - 1)) / 2);
  const CycloElem rhs = CycloElem::reduce(ring, rhs_poly);
  const CycloElem diff = lhs - rhs;
  IdentityCheck c = scalar_check("q_omega_factorial", "[n]_q! = q^(-n(n-1)/2) [n]!",
                                 {{"n", n}, {"N", n_param}}, diff.is_zero(), diff.to_string(), start);
  if (lhs.is_zero() && rhs.is_zero()) c.note = "both sides vanish at the root of unity";
  return c;
}

IdentityCheck check_gauss_periodicity(int k, int p, int l, int n_param) {
  const auto start = std::chrono::steady_clock::now();
  if (p < 0 || p >= n_param || l < 0 || k < 0) throw Error(ErrorKind::InvalidParams, "periodicity needs 0 <= p < N, k, l >= 0");
  const auto& ring = CyclotomicRing::get(n_param);
  const CycloElem lhs = CycloElem::reduce(ring, gauss_binomial(k * n_param + p, l, Flavor::q));
  const CycloElem rhs = CycloElem::reduce(ring, gauss_binomial(p, l, Flavor::q).shifted(k * n_param * l));
  const CycloElem diff = lhs - rhs;
  return scalar_check("gauss_periodicity", "[kN+p, l]_q = q^(kNl) [p, l]_q",
                      {{"N", n_param}, {"k", k}, {"l", l}, {"p", p}}, diff.is_zero(), diff.to_string(), start);
}

IdentityCheck check_alternating_sum(int p, int n_param) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ring = CyclotomicRing::get(n_param);
  LaurentPoly sum;
  for (int l = 0; l <= p; ++l) sum += sign_power(l) * gauss_binomial(p, l, Flavor::q).shifted(l * (1 - p));
  const CycloElem diff = CycloElem::reduce(ring, sum - LaurentPoly(p == 0 ? 1 : 0));
  return scalar_check("alternating_sum", "sum_l (-1)^l q^(l(1-p)) [p, l]_q = delta_{p,0}",
                      {{"N", n_param}, {"p", p}}, diff.is_zero(), diff.to_string(), start);
}

IdentityCheck check_vanishing_wrap(int p, int n, int m, int n_param, int k) {
  const auto start = std::chrono::steady_clock::now();
  const int r = m - 2 * n;
  if (r < 0 || r > n_param - 1 || p < r || p > n_param - 1) {
    throw Error(ErrorKind::InvalidParams, "vanishing wrap needs 0 <= m-2n <= p <= N-1");
  }
  const auto& ring = CyclotomicRing::get(n_param);
  const LaurentPoly generic = gauss_binomial(k * n_param + n_param + p - r, n_param - r, Flavor::q);
  const CycloElem special = CycloElem::reduce(ring, generic);
  const bool holds = special.is_zero() && !generic.is_zero();
  IdentityCheck c = scalar_check("vanishing_wrap", "[kN+N+p-m+2n, N-m+2n]_q = 0 at the root of unity only",
                                 {{"N", n_param}, {"k", k}, {"m", m}, {"n", n}, {"p", p}}, holds,
                                 special.is_zero() ? "generic value is zero" : special.to_string(), start);
  c.note = "generic value " + generic.to_string();
  return c;
}

IdentityCheck check_c_closed_form(int s, int n, int m, int n_param) {
  const auto start = std::chrono::steady_clock::now();
  const auto& ring = CyclotomicRing::get(n_param);
  const CycloElem direct = c_coefficient(s, n, m, n_param, Branch::full);
  const int p = s % n_param;
  const LaurentPoly closed = p == 0 ? sign_power(m - s) * LaurentPoly::q((m - s) * (2 * n - m + 1)) : LaurentPoly{};
  const CycloElem diff = direct - CycloElem::reduce(ring, closed);
  return scalar_check("c_closed_form", "c_{kN+p} = (-1)^(m-kN-p) q^((m-kN-p)(2n-m+1)) delta_{p,0}",
                      {{"N", n_param}, {"m", m}, {"n", n}, {"s", s}}, diff.is_zero(), diff.to_string(), start);
}

IdentityCheck check_omega_lucas(int k, int j, int charge, int n_param) {
  const auto start = std::chrono::steady_clock::now();
  if (charge < 0 || charge >= n_param || k < 0 || j < 0) throw Error(ErrorKind::InvalidParams, "omega Lucas needs 0 <= Q < N");
  const auto& ring = CyclotomicRing::get(n_param);
  const int a = (k + j) * n_param + charge;
  const int b = k * n_param + charge;
  const CycloElem lhs = CycloElem::reduce(ring, gauss_binomial(a, b, Flavor::omega));
  const CycloElem rhs = CycloElem::from_int(ring, binomial(static_cast<unsigned>(k + j), static_cast<unsigned>(k)));
  const CycloElem diff = lhs - rhs;
  return scalar_check("omega_lucas", "[kN+jN+Q, kN+Q]_w = binom(k+j, k)",
                      {{"N", n_param}, {"Q", charge}, {"j", j}, {"k", k}}, diff.is_zero(), diff.to_string(), start);
}

IdentityCheck check_factorial_valuation(int n, int n_param) {
  const auto start = std::chrono::steady_clock::now();
  const int v = phi_valuation(q_factorial(n), n_param);
  return scalar_check("phi_valuation", "v_Phi([n]_q!) = floor(n/N)", {{"N", n_param}, {"n", n}},
                      v == n / n_param, "valuation " + std::to_string(v), start);
}

std::vector<IdentityCheck> qcomb_suite(int n_param) {
  const int N = n_param;
  std::vector<IdentityCheck> out;
  for (int n = 0; n <= 4 * N; ++n) {
    out.push_back(check_q_omega_factorial_relation(n, N));
    out.push_back(check_factorial_valuation(n, N));
  }
  // Periodicity in the top index needs l <= N-1; [2, 2]_q = 1 at N = 2 is a
  // counterexample beyond that.
  for (int s = 0; s <= 4 * N; ++s) {
    for (int l = 0; l <= std::min(s, N - 1); ++l) out.push_back(check_gauss_periodicity(s / N, s % N, l, N));
  }
  for (int p = 0; p < N; ++p) out.push_back(check_alternating_sum(p, N));
  // r = m - 2n >= 1: at r = 0 the bottom index is N and the binomial is k+1.
  for (int r = 1; r < N; ++r) {
    for (int p = r; p < N; ++p) {
      for (int k = 0; k * N + N + p - r <= 4 * N; ++k) out.push_back(check_vanishing_wrap(p, 1, 2 + r, N, k));
    }
  }
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 4 * N; ++m) {
      for (int s = 0; s <= m; ++s) out.push_back(check_c_closed_form(s, n, m, N));
    }
  }
  for (int charge = 0; charge < N; ++charge) {
    for (int k = 0; k <= 3; ++k) {
      for (int j = 0; (k + j) * N + charge <= 4 * N; ++j) out.push_back(check_omega_lucas(k, j, charge, N));
    }
  }
  return out;
}

}  // namespace qloop
