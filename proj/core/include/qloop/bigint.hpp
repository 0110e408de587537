#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qloop {

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in int64 never touch the heap; anything larger is held in a
/// GMP integer. The representation is canonical: a value that fits in int64 is
/// always stored inline, so equality and hashing can look at the fast path.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) : small_(v) {}        // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) { assign(v); }

  BigInt(const BigInt& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  BigInt(BigInt&&) noexcept = default;
  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      small_ = o.small_;
      if (o.big_) {
        big_ = std::make_unique<mpz_class>(*o.big_);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  BigInt& operator=(BigInt&&) noexcept = default;
  ~BigInt() = default;

  static BigInt from_string(std::string_view text);

  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] bool is_zero() const { return !big_ && small_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && small_ == 1; }
  [[nodiscard]] int sign() const {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }
  [[nodiscard]] std::int64_t small_value() const { return small_; }
  [[nodiscard]] mpz_class to_mpz() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  BigInt& operator+=(const BigInt& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    return add_slow(o, false);
  }
  BigInt& operator-=(const BigInt& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    return add_slow(o, true);
  }
  BigInt& operator*=(const BigInt& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    return mul_slow(o);
  }

  /// this += a * b
  void add_product(const BigInt& a, const BigInt& b) {
    if (!big_ && !a.big_ && !b.big_) {
      std::int64_t p;
      std::int64_t r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
          !__builtin_add_overflow(small_, p, &r)) {
        small_ = r;
        return;
      }
    }
    add_product_slow(a, b);
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  BigInt operator-() const;

  friend bool operator==(const BigInt& a, const BigInt& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: mixed representations never coincide
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  /// Truncating division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
  static BigInt gcd(const BigInt& a, const BigInt& b);
  [[nodiscard]] BigInt abs() const { return sign() < 0 ? -*this : *this; }

 private:
  void assign(const mpz_class& v);
  BigInt& add_slow(const BigInt& o, bool subtract);
  BigInt& mul_slow(const BigInt& o);
  void add_product_slow(const BigInt& a, const BigInt& b);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;  // engaged iff the value does not fit in int64
};

BigInt binomial(unsigned n, unsigned k);

}  // namespace qloop
