#pragma once

#include <string>
#include <vector>

#include "qloop/identity.hpp"
#include "qloop/qcomb.hpp"

namespace qloop {

/// (theta_i, theta_j) for the f-function: one E against the other E, or one F
/// against the other F. E0_E1 is (B+, C+), F1_F0 is (B-, C-); the other two
/// are the interchanged pairs.
enum class Pair { E0_E1, E1_E0, F1_F0, F0_F1 };

const char* to_string(Pair p);
std::pair<std::string, std::string> pair_ops(Pair p);
std::vector<Pair> all_pairs();

/// + branch: B = E0, C = E1. - branch: B = F1, C = F0.
enum class Sign { plus, minus };
const char* to_string(Sign s);

/// one_zero: B1 with C0. L_Lm1: BL with CL1.
enum class Side { one_zero, L_Lm1 };
const char* to_string(Side s);

/// Which derivation covers f_{n,m} = 0: id1 for m - 2n >= N, id2 for
/// 0 <= m - 2n <= N - 1 (m > 2n), none otherwise.
enum class Regime { none, id1, id2 };
Regime dispatch_regime(int n, int m, int n_param);

/// Terms of f_{n,m} = sum_{r+s=m} (-1)^r q^{r(2n-m+1)} ti^(r) tj^(n) ti^(s).
std::vector<Term> lusztig_f_terms(const std::string& ti, const std::string& tj, int n, int m, Norm norm);

// Identity builders. Each returns a spec whose terms sum to zero when the
// identity holds. Builders with a regime precondition throw InvalidRegime.

IdentitySpec higher_serre_spec(int n, int m, Pair pair);
IdentitySpec id1_spec(int n, int m, Pair pair, int n_param);
IdentitySpec bcn_spec(int q_sector, int n_param, Sign sign);
IdentitySpec cbn_spec(int q_sector, int n_param, Sign sign);
IdentitySpec id2_spec(int n, int m, Pair pair, int n_param);
/// ti^(kN+p) ti^(N-m+2n) = 0 for 1 <= m-2n <= p <= N-1; support is ti^(kN+N+p-m+2n).
IdentitySpec wrap_vanish_spec(int k, int p, int n, int m, const std::string& ti, int n_param);
IdentitySpec bcb_spec(int q_sector, int n_param, Sign sign);
IdentitySpec cbc_spec(int q_sector, int n_param, Sign sign);
IdentitySpec bcbc_spec(int q_sector, int n_param, Sign sign);
IdentitySpec cbcb_spec(int q_sector, int n_param, Sign sign);

/// The alternating f-combination g built from f-functions, minus the same g
/// rebuilt from the coefficients c_s.
IdentitySpec g_form_spec(int n, int m, Pair pair, int n_param, Branch branch);
/// sum_s c_s ti^(m-s) tj^(n) ti^(s) = 0 (full: m-2n >= N; truncated: m > 2n).
IdentitySpec g_zero_spec(int n, int m, Pair pair, int n_param, Branch branch);

/// Barred-operator forms. The site ids are site_bcn, site_cbn, site_bcb,
/// site_cbc, site_bcbc, site_cbcb.
std::vector<IdentitySpec> site_specs(int q_sector, int n_param, Side side);
/// The +- operator identity each site form comes from, same order as site_specs.
std::vector<IdentitySpec> site_origin_specs(int q_sector, int n_param, Side side);

/// Loop generators as factor words in omega-normalised divided powers:
/// x- = C0^(Q) B1^(N+Q), x+ = C0^(N+Q) B1^(Q),
/// xbar- = BL^(N+Q) CL1^(Q), xbar+ = BL^(Q) CL1^(N+Q).
struct LoopGenerators {
  int q_sector = 0;
  std::vector<OpKey> x_minus, x_plus, xbar_minus, xbar_plus;
};
LoopGenerators build_loop_generators(int q_sector, int n_param);

std::vector<IdentitySpec> lemma_specs(int q_sector, int n_param);
/// family "x": [[[x+,x-],x-],x-] and [[[x-,x+],x+],x+];
/// family "xbar": [[[xbar-,xbar+],xbar+],xbar+] and [[[xbar+,xbar-],xbar-],xbar-].
std::vector<IdentitySpec> nested_specs(int q_sector, int n_param, const std::string& family);

// divided-power identities
IdentitySpec power_factorial_spec(const std::string& op, int n, Norm norm);
IdentitySpec nilpotent_spec(const std::string& op, int n, Norm norm);
IdentitySpec norm_ratio_spec(const std::string& op, int n);
IdentitySpec mulo_spec(int k, int j, int q_sector, int n_param, const std::string& op = "B1");
/// which: Cminus, Bminus, Cplus, Bplus.
IdentitySpec cross_norm_spec(const std::string& which, int n, int length);

// chain-level identities
/// which: C0, CL1, B1, BL.
IdentitySpec half_commute_spec(const std::string& which);
std::vector<IdentitySpec> chain_gate_specs();

}  // namespace qloop
