#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qloop/bigint.hpp"

namespace qloop {

/// Integer Laurent polynomial in the indeterminate q.
///
/// Stored as (exponent, coefficient) pairs sorted by ascending exponent with no
/// zero coefficients, so the empty list is the zero polynomial and every value
/// has exactly one representation.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(BigInt c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt c, int exponent);
  /// q^exponent
  static LaurentPoly q(int exponent = 1) { return monomial(BigInt(1), exponent); }
  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Dense coefficients c[i] for q^(low + i).
  static LaurentPoly from_dense(int low, const std::vector<BigInt>& coeffs);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] int min_exponent() const { return terms_.front().first; }
  [[nodiscard]] int max_exponent() const { return terms_.back().first; }
  [[nodiscard]] BigInt coeff(int exponent) const;

  /// Multiplies by q^k.
  [[nodiscard]] LaurentPoly shifted(int k) const;
  /// Substitutes q -> q^-1.
  [[nodiscard]] LaurentPoly inverted() const;
  [[nodiscard]] LaurentPoly pow(unsigned k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// this += a * b
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact quotient a / b in Z[q, q^-1], or nullopt when b does not divide a.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical rendering: ascending exponents, explicit signs between terms,
  /// e.g. "-q^-2 + 3 + 2q".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qloop
