#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qloop/bigint.hpp"
#include "qloop/laurent_poly.hpp"

namespace qloop {

/// Coefficients (low to high) of the n-th cyclotomic polynomial.
std::vector<BigInt> cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/// The ring Z[q]/Phi_{2N}(q): q becomes a primitive 2N-th root of unity and
/// omega = q^2 a primitive N-th root. Instances are interned per N and live for
/// the duration of the program.
class CyclotomicRing {
 public:
  static const CyclotomicRing& get(int n_param);

  [[nodiscard]] int n_param() const { return n_param_; }
  /// phi(2N), the number of coordinates of an element.
  [[nodiscard]] int degree() const { return degree_; }
  /// Phi_{2N} coefficients, low to high; monic.
  [[nodiscard]] const std::vector<BigInt>& modulus() const { return modulus_; }
  /// Coordinates of q^e (any integer e).
  [[nodiscard]] const std::vector<std::int64_t>& power(long long e) const;

  explicit CyclotomicRing(int n_param);

 private:
  int n_param_;
  int degree_;
  std::vector<BigInt> modulus_;
  std::vector<std::vector<std::int64_t>> powers_;  // q^e for 0 <= e < 2N
};

/// Residue class in Z[q]/Phi_{2N}(q).
///
/// The coordinate vector has exactly degree() entries for a nonzero element;
/// zero is held as an empty vector and compares equal across rings, so a
/// default-constructed CycloElem is the additive identity of every N.
class CycloElem {
 public:
  using Coords = boost::container::small_vector<BigInt, 4>;

  CycloElem() = default;
  CycloElem(const CyclotomicRing& ring, Coords coords);

  static CycloElem from_int(const CyclotomicRing& ring, const BigInt& c);
  /// The reduction homomorphism Z[q, q^-1] -> Z[q]/Phi_{2N}.
  static CycloElem reduce(const CyclotomicRing& ring, const LaurentPoly& p);

  [[nodiscard]] const CyclotomicRing* ring() const { return ring_; }
  [[nodiscard]] bool is_zero() const { return coords_.empty(); }
  /// Full coordinate vector (zero-padded) for a given ring.
  [[nodiscard]] std::vector<BigInt> coordinates(const CyclotomicRing& ring) const;
  [[nodiscard]] const Coords& raw() const { return coords_; }

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  CycloElem operator-() const;
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.coords_ == b.coords_; }

  /// this += a * b, without materialising the product.
  void add_product(const CycloElem& a, const CycloElem& b);

  /// Exact quotient in Z[zeta_{2N}], or nullopt if b does not divide a there.
  static std::optional<CycloElem> divide_exact(const CycloElem& a, const CycloElem& b);

  [[nodiscard]] std::complex<double> to_complex() const;
  /// Rendered as a polynomial in q of degree < phi(2N), e.g. "1 + q".
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  const CyclotomicRing* ring_ = nullptr;
  Coords coords_;
};

}  // namespace qloop
