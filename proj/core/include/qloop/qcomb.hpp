#pragma once

#include <vector>

#include "qloop/cyclotomic.hpp"
#include "qloop/identity_check.hpp"
#include "qloop/laurent_poly.hpp"

namespace qloop {

/// The two factorial normalisations: symmetric q-integers
/// [n]_q = (q^n - q^-n)/(q - q^-1), and omega-integers [n] = (1 - w^n)/(1 - w)
/// with w = q^2.
enum class Flavor { q, omega };

/// [n]_q for any integer n.
LaurentPoly q_int(int n);
/// [n] = 1 + w + ... + w^(n-1) as a polynomial in q, n >= 0.
LaurentPoly omega_int(int n);
LaurentPoly q_factorial(int n);
/// N is accepted for symmetry with the reduction step; the polynomial itself
/// does not depend on it.
LaurentPoly omega_factorial(int n, int n_param = 0);
LaurentPoly factorial(int n, Flavor flavor);

/// Gaussian binomial via the q-Pascal recursion; 0 when l < 0 or l > s.
LaurentPoly gauss_binomial(int s, int l, Flavor flavor);
/// Same value via factorial ratio and exact division; throws
/// InternalInconsistency if the division leaves a remainder.
LaurentPoly gauss_binomial_by_ratio(int s, int l, Flavor flavor);

/// Number of times Phi_{2N} divides p (p nonzero).
int phi_valuation(const LaurentPoly& p, int n_param);

/// c_s of the alternating f-combination g. The full branch sums l = 0..N-1,
/// the truncated branch l = 0..m-2n-1. Returned before specialisation.
enum class Branch { full, truncated };
LaurentPoly c_coefficient_poly(int s, int n, int m, int n_param, Branch branch);
CycloElem c_coefficient(int s, int n, int m, int n_param, Branch branch);

// Scalar identity checks; every one reduces both sides in Z[q]/Phi_{2N}.
IdentityCheck check_q_omega_factorial_relation(int n, int n_param);
IdentityCheck check_gauss_periodicity(int k, int p, int l, int n_param);
IdentityCheck check_alternating_sum(int p, int n_param);
IdentityCheck check_vanishing_wrap(int p, int n, int m, int n_param, int k);
IdentityCheck check_c_closed_form(int s, int n, int m, int n_param);
IdentityCheck check_omega_lucas(int k, int j, int charge, int n_param);
IdentityCheck check_factorial_valuation(int n, int n_param);

/// The full combinatorial sweep for one N: p <= N-1, s <= 4N, l <= s.
std::vector<IdentityCheck> qcomb_suite(int n_param);

}  // namespace qloop
