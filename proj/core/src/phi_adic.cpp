#include "qloop/phi_adic.hpp"

#include <algorithm>
#include <utility>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

using Poly = std::vector<BigInt>;

// p = quot * Phi + rem with deg rem < deg Phi; Phi monic.
std::pair<Poly, Poly> divmod_modulus(Poly p, const Poly& modulus) {
  const std::size_t d = modulus.size() - 1;
  if (p.size() <= d) {
    p.resize(d);
    return {Poly{}, std::move(p)};
  }
  Poly quot(p.size() - d);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt c = p[i + d];
    if (!c.is_zero()) {
      for (std::size_t j = 0; j <= d; ++j) p[i + j].add_product(-c, modulus[j]);
    }
    quot[i] = std::move(c);
  }
  p.resize(d);
  return {std::move(quot), std::move(p)};
}


CycloElem as_digit(const CyclotomicRing& ring, Poly p) {
  p.resize(static_cast<std::size_t>(ring.degree()));
  CycloElem::Coords coords(p.begin(), p.end());
  return CycloElem(ring, std::move(coords));
}

// Ordinary product of two digits (no reduction), split into the digit that stays
// in place and the carry into the next Phi power.
std::pair<CycloElem, CycloElem> split_product(const CyclotomicRing& ring, const CycloElem& a, const CycloElem& b) {
  const auto ac = a.coordinates(ring);
  const auto bc = b.coordinates(ring);
  Poly prod(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) prod[i + j].add_product(ac[i], bc[j]);
  }
  auto [quot, rem] = divmod_modulus(std::move(prod), ring.modulus());
  return {as_digit(ring, std::move(rem)), as_digit(ring, std::move(quot))};
}

}  // namespace

PhiAdicElem::PhiAdicElem(const CyclotomicRing& ring, int trunc, int prec, std::vector<CycloElem> digits)
    : ring_(&ring), trunc_(trunc), prec_(prec), digits_(std::move(digits)) {
  trim_to_precision();
}

void PhiAdicElem::trim_to_precision() {
  if (prec_ >= kExact) {
    digits_.clear();
    return;
  }
  digits_.resize(static_cast<std::size_t>(std::max(prec_, 0)));
}

PhiAdicElem PhiAdicElem::embed(const CyclotomicRing& ring, int trunc_order, const LaurentPoly& p) {
  if (trunc_order < 0) throw Error(ErrorKind::InvalidParams, "truncation order must be non-negative");
  if (p.is_zero()) return PhiAdicElem(ring, trunc_order, kExact, {});
  const int shift = std::min(p.min_exponent(), 0);
  // R = q^-shift * p is an ordinary polynomial.
  Poly rest(static_cast<std::size_t>(p.max_exponent() - shift + 1));
  for (const auto& [e, c] : p.terms()) rest[static_cast<std::size_t>(e - shift)] = c;
  std::vector<CycloElem> digits;
  for (int i = 0; i <= trunc_order; ++i) {
    auto [quot, rem] = divmod_modulus(std::move(rest), ring.modulus());
    digits.push_back(as_digit(ring, std::move(rem)));
    rest = std::move(quot);
    if (rest.empty()) rest.assign(1, BigInt(0));
  }
  PhiAdicElem r(ring, trunc_order, trunc_order + 1, std::move(digits));
  if (shift == 0) return r;
  return divide(r, embed(ring, trunc_order, LaurentPoly::q(-shift)));
}

int PhiAdicElem::valuation() const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!digits_[i].is_zero()) return static_cast<int>(i);
  }
  return prec_;
}

CycloElem PhiAdicElem::term0() const {
  if (prec_ < 1) throw Error(ErrorKind::TruncationOverflow, "no Phi-adic digit is known; raise the truncation order");
  if (digits_.empty()) return {};
  return digits_.front();
}

PhiAdicElem PhiAdicElem::operator-() const {
  PhiAdicElem r = *this;
  for (auto& d : r.digits_) d = -d;
  return r;
}

PhiAdicElem& PhiAdicElem::operator+=(const PhiAdicElem& o) {
  if (o.ring_ == nullptr && o.prec_ >= kExact) return *this;
  if (ring_ == nullptr && prec_ >= kExact) return *this = o;
  if (!ring_) ring_ = o.ring_;
  trunc_ = std::max(trunc_, o.trunc_);
  prec_ = std::min(prec_, o.prec_);
  const std::size_t n = prec_ >= kExact ? std::max(digits_.size(), o.digits_.size())
                                        : static_cast<std::size_t>(prec_);
  digits_.resize(n);
  for (std::size_t i = 0; i < n && i < o.digits_.size(); ++i) digits_[i] += o.digits_[i];
  trim_to_precision();
  return *this;
}

PhiAdicElem operator*(const PhiAdicElem& a, const PhiAdicElem& b) {
  const bool a_exact_zero = a.prec_ >= PhiAdicElem::kExact && a.digits_.empty();
  const bool b_exact_zero = b.prec_ >= PhiAdicElem::kExact && b.digits_.empty();
  if (a_exact_zero || b_exact_zero) return {};
  const CyclotomicRing& ring = *(a.ring_ ? a.ring_ : b.ring_);
  const int trunc = std::max(a.trunc_, b.trunc_);
  const int va = a.valuation();
  const int vb = b.valuation();
  const int prec = std::min({a.prec_ + vb, b.prec_ + va, trunc + 1});
  std::vector<CycloElem> out(static_cast<std::size_t>(std::max(prec, 0)) + 1);
  for (std::size_t i = 0; i < a.digits_.size(); ++i) {
    if (a.digits_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.digits_.size() && static_cast<int>(i + j) < prec; ++j) {
      if (b.digits_[j].is_zero()) continue;
      auto [stay, carry] = split_product(ring, a.digits_[i], b.digits_[j]);
      out[i + j] += stay;
      out[i + j + 1] += carry;
    }
  }
  return PhiAdicElem(ring, trunc, prec, std::move(out));
}

bool operator==(const PhiAdicElem& a, const PhiAdicElem& b) {
  const int p = std::min(a.prec_, b.prec_);
  const std::size_t n = std::max(a.digits_.size(), b.digits_.size());
  for (std::size_t i = 0; i < n && static_cast<int>(i) < p; ++i) {
    const CycloElem da = i < a.digits_.size() ? a.digits_[i] : CycloElem{};
    const CycloElem db = i < b.digits_.size() ? b.digits_[i] : CycloElem{};
    if (!(da == db)) return false;
  }
  return true;
}

PhiAdicElem PhiAdicElem::divide(const PhiAdicElem& a, const PhiAdicElem& b) {
  const int vb = b.valuation();
  if (vb >= b.prec_) throw Error(ErrorKind::NotDivisible, "Phi-adic divisor is zero to known precision");
  const CyclotomicRing& ring = *b.ring_;
  const int trunc = std::max(a.trunc_, b.trunc_);
  const bool a_exact_zero = a.prec_ >= kExact && a.digits_.empty();
  if (a_exact_zero) return {};
  const int va = a.valuation();
  if (va < vb) throw Error(ErrorKind::NotDivisible, "dividend valuation below divisor valuation");
  const int prec = std::min({a.prec_, b.prec_ + va - vb, trunc + 1 + vb}) - vb;
  if (prec < 1) throw Error(ErrorKind::TruncationOverflow, "quotient has no known Phi-adic digit");

  // Shift both operands down by vb digits, then solve digit by digit.
  auto shifted = [&](const PhiAdicElem& x) {
    std::vector<CycloElem> d;
    for (std::size_t i = static_cast<std::size_t>(vb); i < x.digits_.size(); ++i) d.push_back(x.digits_[i]);
    const int p = std::min(x.prec_ - vb, prec);
    return PhiAdicElem(ring, trunc, p, std::move(d));
  };
  PhiAdicElem residual = shifted(a);
  const PhiAdicElem divisor = shifted(b);
  const CycloElem& lead = divisor.digits_.front();
  std::vector<CycloElem> quot(static_cast<std::size_t>(prec));
  for (int t = 0; t < prec; ++t) {
    const CycloElem rt = static_cast<std::size_t>(t) < residual.digits_.size() ? residual.digits_[static_cast<std::size_t>(t)] : CycloElem{};
    if (rt.is_zero()) continue;
    auto ct = CycloElem::divide_exact(rt, lead);
    if (!ct) throw Error(ErrorKind::NotDivisible, "digit quotient is not integral in Z[zeta]");
    std::vector<CycloElem> mono(static_cast<std::size_t>(t) + 1);
    mono.back() = *ct;
    residual -= divisor * PhiAdicElem(ring, trunc, prec, std::move(mono));
    quot[static_cast<std::size_t>(t)] = std::move(*ct);
  }
  return PhiAdicElem(ring, trunc, prec, std::move(quot));
}

std::string PhiAdicElem::to_string() const {
  if (prec_ >= kExact) return "0";
  std::string out = "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i > 0) out += "; ";
    out += digits_[i].to_string();
  }
  out += "] + O(Phi^" + std::to_string(prec_) + ")";
  return out;
}

}  // namespace qloop
