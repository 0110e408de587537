#include "qloop/divpow.hpp"

#include "qloop/errors.hpp"
#include "qloop/qcomb.hpp"

namespace qloop {

namespace {

template <class R, class Div>
GradedOperator<R> divide_entries(const GradedOperator<R>& op, Div&& div) {
  return op.template map<R>([&](const R& v) { return div(v); });
}

}  // namespace

const char* to_string(Norm n) {
  switch (n) {
    case Norm::none: return "none";
    case Norm::q_fact: return "q_fact";
    case Norm::omega_fact: return "omega_fact";
  }
  return "none";
}

LaurentPoly norm_step(int n, Norm norm) {
  switch (norm) {
    case Norm::q_fact: return q_int(n);
    case Norm::omega_fact: return omega_int(n);
    case Norm::none: break;
  }
  return LaurentPoly(1);
}

LaurentPoly norm_factorial(int n, Norm norm) {
  switch (norm) {
    case Norm::q_fact: return q_factorial(n);
    case Norm::omega_fact: return omega_factorial(n);
    case Norm::none: break;
  }
  return LaurentPoly(1);
}

GradedOperator<LaurentPoly> next_divided_power(const GradedOperator<LaurentPoly>& theta,
                                               const GradedOperator<LaurentPoly>& prev, int n_next, Norm norm) {
  const LaurentPoly d = norm_step(n_next, norm);
  return divide_entries(theta * prev, [&](const LaurentPoly& v) {
    auto r = LaurentPoly::divide_exact(v, d);
    if (!r) throw Error(ErrorKind::NotDivisible, "entry " + v.to_string() + " is not divisible by " + d.to_string());
    return std::move(*r);
  });
}

GradedOperator<PhiAdicElem> next_divided_power(const GradedOperator<PhiAdicElem>& theta,
                                               const GradedOperator<PhiAdicElem>& prev, int n_next, Norm norm,
                                               int trunc_order) {
  const PhiAdicElem d =
      PhiAdicElem::embed(CyclotomicRing::get(theta.space()->n_param()), trunc_order, norm_step(n_next, norm));
  return divide_entries(theta * prev, [&](const PhiAdicElem& v) { return PhiAdicElem::divide(v, d); });
}

GradedOperator<LaurentPoly> divided_power(const GradedOperator<LaurentPoly>& theta, int n, Norm norm) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "divided power order must be non-negative");
  auto out = GradedOperator<LaurentPoly>::identity(theta.space(), LaurentPoly(1));
  for (int i = 1; i <= n; ++i) out = next_divided_power(theta, out, i, norm);
  return out;
}

GradedOperator<PhiAdicElem> divided_power(const GradedOperator<PhiAdicElem>& theta, int n, Norm norm,
                                          int trunc_order) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "divided power order must be non-negative");
  const auto& ring = CyclotomicRing::get(theta.space()->n_param());
  auto out = GradedOperator<PhiAdicElem>::identity(theta.space(), PhiAdicElem::embed(ring, trunc_order, LaurentPoly(1)));
  for (int i = 1; i <= n; ++i) out = next_divided_power(theta, out, i, norm, trunc_order);
  return out;
}

int default_phi_trunc(int n_max, int n_param) { return n_max / n_param + 2; }

GradedOperator<PhiAdicElem> embed_phi_adic(const GradedOperator<LaurentPoly>& op, int trunc_order) {
  const auto& ring = CyclotomicRing::get(op.space()->n_param());
  return op.map<PhiAdicElem>([&](const LaurentPoly& v) { return PhiAdicElem::embed(ring, trunc_order, v); });
}

GradedOperator<CycloElem> reduce_cyclotomic(const GradedOperator<LaurentPoly>& op) {
  const auto& ring = CyclotomicRing::get(op.space()->n_param());
  return op.map<CycloElem>([&](const LaurentPoly& v) { return CycloElem::reduce(ring, v); });
}

GradedOperator<CycloElem> phi_adic_term0(const GradedOperator<PhiAdicElem>& op) {
  return op.map<CycloElem>([](const PhiAdicElem& v) { return v.term0(); });
}

}  // namespace qloop
