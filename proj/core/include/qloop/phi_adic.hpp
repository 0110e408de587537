#pragma once

#include <climits>
#include <string>
#include <vector>

#include "qloop/cyclotomic.hpp"
#include "qloop/laurent_poly.hpp"

namespace qloop {

/// Truncated Phi_{2N}-adic expansion  sum_i a_i(q) Phi_{2N}(q)^i  with digits
/// a_i of degree < phi(2N).
///
/// This is the completion of Z[q, q^-1] at the prime Phi_{2N}, cut off after
/// K+1 digits. It lets a quotient such as theta^n / [n]_q! be formed exactly even
/// though the denominator vanishes at the root of unity: the division is legal
/// whenever the numerator's valuation is at least the denominator's, and the
/// value at the root of unity is digit 0 of the quotient.
///
/// Each element tracks its absolute precision (number of known digits). A
/// default-constructed element is an exact zero.
class PhiAdicElem {
 public:
  static constexpr int kExact = INT_MAX / 4;

  PhiAdicElem() = default;

  /// Exact expansion of a Laurent polynomial, truncated to K+1 digits.
  static PhiAdicElem embed(const CyclotomicRing& ring, int trunc_order, const LaurentPoly& p);

  [[nodiscard]] const CyclotomicRing* ring() const { return ring_; }
  [[nodiscard]] int trunc_order() const { return trunc_; }
  [[nodiscard]] int precision() const { return prec_; }
  [[nodiscard]] const std::vector<CycloElem>& digits() const { return digits_; }
  /// Index of the first nonzero digit; precision() when every known digit is 0.
  [[nodiscard]] int valuation() const;
  [[nodiscard]] bool is_zero() const { return valuation() >= prec_; }
  /// Value at the root of unity. Throws TruncationOverflow if no digit is known.
  [[nodiscard]] CycloElem term0() const;

  PhiAdicElem& operator+=(const PhiAdicElem& o);
  PhiAdicElem& operator-=(const PhiAdicElem& o) { return *this += -o; }
  friend PhiAdicElem operator+(PhiAdicElem a, const PhiAdicElem& b) { return a += b; }
  friend PhiAdicElem operator-(PhiAdicElem a, const PhiAdicElem& b) { return a -= b; }
  friend PhiAdicElem operator*(const PhiAdicElem& a, const PhiAdicElem& b);
  PhiAdicElem& operator*=(const PhiAdicElem& o) { return *this = *this * o; }
  PhiAdicElem operator-() const;
  /// Equal when every digit known to both agrees.
  friend bool operator==(const PhiAdicElem& a, const PhiAdicElem& b);

  void add_product(const PhiAdicElem& a, const PhiAdicElem& b) { *this += a * b; }

  /// Valuation-aware exact division. Throws NotDivisible when
  /// valuation(a) < valuation(b) or a digit quotient is not integral, and
  /// TruncationOverflow when the quotient would carry no known digit.
  static PhiAdicElem divide(const PhiAdicElem& a, const PhiAdicElem& b);

  [[nodiscard]] std::string to_string() const;

 private:
  PhiAdicElem(const CyclotomicRing& ring, int trunc, int prec, std::vector<CycloElem> digits);
  void trim_to_precision();

  const CyclotomicRing* ring_ = nullptr;
  int trunc_ = 0;
  int prec_ = kExact;
  std::vector<CycloElem> digits_;
};

}  // namespace qloop
