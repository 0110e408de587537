#include "qloop/bigint.hpp"

#include <stdexcept>

namespace qloop {

namespace {

mpz_class from_int64(std::int64_t v) {
  mpz_class out;
  // mpz_set_si takes long, which is 64 bits on every platform we build for.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

}  // namespace

BigInt BigInt::from_string(std::string_view text) {
  mpz_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("BigInt: not a decimal integer: " + std::string(text));
  }
  return BigInt(v);
}

void BigInt::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

mpz_class BigInt::to_mpz() const { return big_ ? *big_ : from_int64(small_); }

double BigInt::to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }

std::string BigInt::to_string() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

BigInt BigInt::operator-() const {
  if (!big_ && small_ != INT64_MIN) return BigInt(static_cast<long long>(-small_));
  mpz_class v = -to_mpz();
  return BigInt(v);
}

BigInt& BigInt::add_slow(const BigInt& o, bool subtract) {
  mpz_class v = to_mpz();
  if (subtract) {
    v -= o.to_mpz();
  } else {
    v += o.to_mpz();
  }
  assign(v);
  return *this;
}

BigInt& BigInt::mul_slow(const BigInt& o) {
  mpz_class v = to_mpz() * o.to_mpz();
  assign(v);
  return *this;
}

void BigInt::add_product_slow(const BigInt& a, const BigInt& b) {
  mpz_class v = to_mpz();
  mpz_addmul(v.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  assign(v);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    quot = BigInt(static_cast<long long>(a.small_ / b.small_));
    rem = BigInt(static_cast<long long>(a.small_ % b.small_));
    return;
  }
  mpz_class q;
  mpz_class r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  quot = BigInt(q);
  rem = BigInt(r);
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return BigInt(g);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, k);
  return BigInt(v);
}

}  // namespace qloop
