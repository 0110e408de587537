#pragma once

#include <string>
#include <vector>

#include "qloop/identity_check.hpp"
#include "qloop/operator_store.hpp"

namespace qloop {

/// coeff * (factors[0] * factors[1] * ...). An empty factor list is the identity.
struct Term {
  LaurentPoly coeff;
  std::vector<OpKey> factors;
};

/// An operator identity sum(terms) = 0.
struct IdentitySpec {
  std::string id;
  std::string anchor;
  ParamRecord params;
  std::vector<Term> terms;
  /// When nonempty, vacuity is judged on these operators instead of the terms.
  /// Used for statements of the form "this product vanishes" whose evidence is
  /// that a related operator does not.
  std::vector<Term> support;
  /// Holds only after q is specialised. In the laurent ring the residual is
  /// reduced mod Phi_{2N} before the zero test.
  bool root_only = false;
  std::string note;
};

/// Residual magnitude below which the float ring reports ApproxZero.
inline constexpr double kFloatTolerance = 1e-9;

/// Evaluates left to right with shared prefixes, sums the terms and classifies:
/// VacuousZero if every term (or support operator) is zero, ExactZero if the
/// residual is zero, ApproxZero in the float ring, otherwise Nonzero with the
/// first nonzero residual entry as witness. Errors become status Error.
template <class S>
IdentityCheck evaluate(const IdentitySpec& spec, OperatorStore<S>& store);

extern template IdentityCheck evaluate(const IdentitySpec&, OperatorStore<LaurentPoly>&);
extern template IdentityCheck evaluate(const IdentitySpec&, OperatorStore<CycloElem>&);
extern template IdentityCheck evaluate(const IdentitySpec&, OperatorStore<Complex>&);

/// sum(terms) as an operator, without classification.
template <class S>
GradedOperator<S> residual(const IdentitySpec& spec, OperatorStore<S>& store);

extern template GradedOperator<LaurentPoly> residual(const IdentitySpec&, OperatorStore<LaurentPoly>&);
extern template GradedOperator<CycloElem> residual(const IdentitySpec&, OperatorStore<CycloElem>&);
extern template GradedOperator<Complex> residual(const IdentitySpec&, OperatorStore<Complex>&);

/// Words over abstract letters with integer coefficients.
struct Word {
  long long coeff = 0;
  std::vector<int> letters;
};

/// [[..[[a, b], b]..], b] with `depth` brackets, expanded into words. Like words
/// are merged and the result sorted by letters. For depth 3 the coefficients
/// are 1, -3, 3, -1.
std::vector<Word> expand_nested_commutator(int a, int b, int depth);

/// Substitutes each letter by a factor word, producing identity terms.
std::vector<Term> substitute_words(const std::vector<Word>& words, const std::vector<std::vector<OpKey>>& letters);

}  // namespace qloop
