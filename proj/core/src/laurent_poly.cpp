#include "qloop/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qloop {

namespace {

// Dense view [low, low + size) of a Laurent polynomial.
std::vector<BigInt> to_dense(const LaurentPoly& p, int low, int size) {
  std::vector<BigInt> out(static_cast<std::size_t>(size));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(BigInt c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(exponent, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, const std::vector<BigInt>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) p.terms_.emplace_back(low + static_cast<int>(i), coeffs[i]);
  }
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return BigInt(0);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& mono = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& other = a.terms_.size() == 1 ? b : a;
    const auto& [me, mc] = mono.terms_.front();
    LaurentPoly p;
    p.terms_.reserve(other.terms_.size());
    for (const auto& [e, c] : other.terms_) p.terms_.emplace_back(e + me, c * mc);
    return p;
  }
  const int low = a.min_exponent() + b.min_exponent();
  const int high = a.max_exponent() + b.max_exponent();
  std::vector<BigInt> acc(static_cast<std::size_t>(high - low + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - low)].add_product(ca, cb);
  }
  return LaurentPoly::from_dense(low, acc);
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const auto& [be, bc] = b.terms_.front();
    LaurentPoly p;
    p.terms_.reserve(a.terms_.size());
    for (const auto& [e, c] : a.terms_) {
      BigInt quot;
      BigInt rem;
      BigInt::divmod(c, bc, quot, rem);
      if (!rem.is_zero()) return std::nullopt;
      p.terms_.emplace_back(e - be, std::move(quot));
    }
    return p;
  }
  // Write a = q^ea * A, b = q^eb * B with A(0), B(0) nonzero and run long
  // division on the ordinary polynomials A and B.
  const int ea = a.min_exponent();
  const int eb = b.min_exponent();
  const int deg_a = a.max_exponent() - ea;
  const int deg_b = b.max_exponent() - eb;
  if (deg_a < deg_b) return std::nullopt;
  std::vector<BigInt> rem = to_dense(a, ea, deg_a + 1);
  const std::vector<BigInt> div = to_dense(b, eb, deg_b + 1);
  const BigInt& lead = div.back();
  std::vector<BigInt> quot(static_cast<std::size_t>(deg_a - deg_b + 1));
  for (int i = deg_a - deg_b; i >= 0; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i + deg_b)];
    if (top.is_zero()) continue;
    BigInt qc;
    BigInt r;
    if (lead.is_one()) {
      qc = top;
    } else {
      BigInt::divmod(top, lead, qc, r);
      if (!r.is_zero()) return std::nullopt;
    }
    for (int j = 0; j <= deg_b; ++j) {
      if (!div[static_cast<std::size_t>(j)].is_zero()) {
        rem[static_cast<std::size_t>(i + j)].add_product(-qc, div[static_cast<std::size_t>(j)]);
      }
    }
    quot[static_cast<std::size_t>(i)] = std::move(qc);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return LaurentPoly::from_dense(ea - eb, quot);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigInt mag = c.abs();
    if (e == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string();
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace qloop
