#pragma once

#include <string>

#include "qloop/graded_operator.hpp"
#include "qloop/laurent_poly.hpp"
#include "qloop/phi_adic.hpp"

namespace qloop {

/// none: plain power theta^n. q_fact: theta^n / [n]_q!. omega_fact: theta^n / [n]!.
enum class Norm { none, q_fact, omega_fact };

const char* to_string(Norm n);

/// [n]_q or [n] (omega flavour), the step divisor of the iteration.
LaurentPoly norm_step(int n, Norm norm);
/// [n]_q!, [n]! or 1.
LaurentPoly norm_factorial(int n, Norm norm);

/// theta^(n+1) = theta * theta^(n) / [n+1], the division done entry-wise.
/// Throws NotDivisible if an entry leaves a remainder.
GradedOperator<LaurentPoly> next_divided_power(const GradedOperator<LaurentPoly>& theta,
                                               const GradedOperator<LaurentPoly>& prev, int n_next, Norm norm);
/// Phi-adic variant; also throws TruncationOverflow.
GradedOperator<PhiAdicElem> next_divided_power(const GradedOperator<PhiAdicElem>& theta,
                                               const GradedOperator<PhiAdicElem>& prev, int n_next, Norm norm,
                                               int trunc_order);

/// Iterative theta^(n) in Z[q, q^-1].
GradedOperator<LaurentPoly> divided_power(const GradedOperator<LaurentPoly>& theta, int n, Norm norm);
/// Iterative theta^(n) in the Phi-adic completion with K = trunc_order.
GradedOperator<PhiAdicElem> divided_power(const GradedOperator<PhiAdicElem>& theta, int n, Norm norm,
                                          int trunc_order);

/// Default truncation order floor(n_max / N) + 2.
int default_phi_trunc(int n_max, int n_param);

GradedOperator<PhiAdicElem> embed_phi_adic(const GradedOperator<LaurentPoly>& op, int trunc_order);
GradedOperator<CycloElem> reduce_cyclotomic(const GradedOperator<LaurentPoly>& op);
GradedOperator<CycloElem> phi_adic_term0(const GradedOperator<PhiAdicElem>& op);

}  // namespace qloop
