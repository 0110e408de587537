#pragma once

#include <complex>
#include <cstdio>
#include <optional>
#include <string>

#include "qloop/cyclotomic.hpp"
#include "qloop/laurent_poly.hpp"
#include "qloop/phi_adic.hpp"

namespace qloop {

using Complex = std::complex<double>;

/// Where generic-q scalars land when an operator is specialised.
struct RingContext {
  int n_param = 2;
  int phi_trunc = 2;  // Phi-adic truncation order K
};

/// Uniform access to the four scalar rings used by the operator layer.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<LaurentPoly> {
  static constexpr bool exact = true;
  static constexpr const char* name = "laurent";
  static bool is_zero(const LaurentPoly& s) { return s.is_zero(); }
  static void add_product(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b) { acc.add_product(a, b); }
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly::divide_exact(a, b);
  }
  static LaurentPoly from_laurent(const LaurentPoly& p, const RingContext&) { return p; }
  static std::string to_string(const LaurentPoly& s) { return s.to_string(); }
  static double magnitude(const LaurentPoly& s) { return s.is_zero() ? 0.0 : 1.0; }
};

template <>
struct scalar_traits<CycloElem> {
  static constexpr bool exact = true;
  static constexpr const char* name = "cyclotomic";
  static bool is_zero(const CycloElem& s) { return s.is_zero(); }
  static void add_product(CycloElem& acc, const CycloElem& a, const CycloElem& b) { acc.add_product(a, b); }
  static std::optional<CycloElem> divide_exact(const CycloElem& a, const CycloElem& b) {
    return CycloElem::divide_exact(a, b);
  }
  static CycloElem from_laurent(const LaurentPoly& p, const RingContext& ctx) {
    return CycloElem::reduce(CyclotomicRing::get(ctx.n_param), p);
  }
  static std::string to_string(const CycloElem& s) { return s.to_string(); }
  static double magnitude(const CycloElem& s) { return s.is_zero() ? 0.0 : 1.0; }
};

template <>
struct scalar_traits<PhiAdicElem> {
  static constexpr bool exact = true;
  static constexpr const char* name = "phi-adic";
  static bool is_zero(const PhiAdicElem& s) { return s.is_zero(); }
  static void add_product(PhiAdicElem& acc, const PhiAdicElem& a, const PhiAdicElem& b) { acc.add_product(a, b); }
  static std::optional<PhiAdicElem> divide_exact(const PhiAdicElem& a, const PhiAdicElem& b) {
    return PhiAdicElem::divide(a, b);
  }
  static PhiAdicElem from_laurent(const LaurentPoly& p, const RingContext& ctx) {
    return PhiAdicElem::embed(CyclotomicRing::get(ctx.n_param), ctx.phi_trunc, p);
  }
  static std::string to_string(const PhiAdicElem& s) { return s.to_string(); }
  static double magnitude(const PhiAdicElem& s) { return s.is_zero() ? 0.0 : 1.0; }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(const Complex& s) { return s == Complex{}; }
  static void add_product(Complex& acc, const Complex& a, const Complex& b) { acc += a * b; }
  static std::optional<Complex> divide_exact(const Complex& a, const Complex& b) {
    if (b == Complex{}) return std::nullopt;
    return a / b;
  }
  static Complex from_laurent(const LaurentPoly& p, const RingContext& ctx) {
    return CycloElem::reduce(CyclotomicRing::get(ctx.n_param), p).to_complex();
  }
  static std::string to_string(const Complex& s) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", s.real(), s.imag());
    return buf;
  }
  static double magnitude(const Complex& s) { return std::abs(s); }
};

}  // namespace qloop
