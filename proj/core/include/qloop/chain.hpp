#pragma once

#include <map>
#include <memory>
#include <string>

#include "qloop/graded_operator.hpp"
#include "qloop/site_rep.hpp"

namespace qloop {

using LaurentOp = GradedOperator<LaurentPoly>;

/// Scalars applied to the B-type (E0, F1) and C-type (E1, F0) generators.
/// Every serre-module identity is homogeneous in each, so rescaling must not
/// change any status.
struct Rescale {
  LaurentPoly alpha = LaurentPoly(1);
  LaurentPoly beta = LaurentPoly(1);
  [[nodiscard]] bool trivial() const { return alpha == LaurentPoly(1) && beta == LaurentPoly(1); }
  /// alpha = q^3, beta = -q.
  static Rescale audit();
};

/// Chevalley generators on L sites via the iterated coproduct
///   E1 = sum_j k'_1..k'_{j-1} e'_j        F1 = sum_j f'_j k'^-1_{j+1}..k'^-1_L
///   E0 = sum_j k'^-1_1..k'^-1_{j-1} f'_j  F0 = sum_j e'_j k'_{j+1}..k'_L
/// together with K, A_L = prod Z_j and A_L^{1/2} = q^{sum w}.
struct ChainOperators {
  std::shared_ptr<const ChainSpace> space;
  LaurentOp E0, E1, F0, F1;
  LaurentOp K, K_inv, A, A_inv, A_half, A_half_inv;
  LaurentOp identity;
};

ChainOperators build_chain_generators(const SiteRep& rep, int length, const Rescale& rescale = {});

/// B1 = q^{L-2} A^{1/2} E0,  BL = q^-1 A^{1/2} F1,
/// C0 = -q^{L-2} E1 A^{1/2}, CL1 = -q^-1 F0 A^{1/2}.
struct BarredOperators {
  LaurentOp B1, BL, C0, CL1;
};

BarredOperators build_barred_ops(const ChainOperators& ops);

/// Name -> operator for every base operator the identity engine may reference:
/// E0 E1 F0 F1 K Kinv A Ainv Ahalf Ahalf_inv B1 BL C0 CL1 Id.
std::map<std::string, LaurentOp> base_operator_table(const SiteRep& rep, int length, const Rescale& rescale = {});

/// Expected sector shift of a named generator: -1 for E1, F0, C0, CL1;
/// +1 for E0, F1, B1, BL; 0 for the diagonal operators.
int expected_charge(const std::string& name);

}  // namespace qloop
