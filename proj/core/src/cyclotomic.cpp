#include "qloop/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j].add_product(a[i], b[j]);
  }
  return out;
}

// Exact division by a monic integer polynomial.
std::vector<BigInt> poly_div_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt c = num[i + dd];
    for (std::size_t j = 0; j <= dd; ++j) num[i + j].add_product(-c, den[j]);
    quot[i] = std::move(c);
  }
  for (const auto& r : num) {
    if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "cyclotomic index must be positive");
  std::vector<BigInt> num(static_cast<std::size_t>(n) + 1);
  num.front() = BigInt(-1);
  num.back() = BigInt(1);
  std::vector<BigInt> den{BigInt(1)};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  }
  return poly_div_monic(std::move(num), den);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicRing::CyclotomicRing(int n_param) : n_param_(n_param) {
  if (n_param < 2) throw Error(ErrorKind::InvalidParams, "N must be at least 2");
  modulus_ = cyclotomic_polynomial(2 * n_param);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  // q^e mod Phi for 0 <= e < 2N by repeated multiplication with q.
  std::vector<std::int64_t> cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  for (int e = 0; e < 2 * n_param; ++e) {
    powers_.push_back(cur);
    std::vector<std::int64_t> next(static_cast<std::size_t>(degree_), 0);
    const std::int64_t top = cur.back();
    for (int i = degree_ - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < degree_; ++i) {
      next[static_cast<std::size_t>(i)] -= top * modulus_[static_cast<std::size_t>(i)].small_value();
    }
    cur = std::move(next);
  }
}

const CyclotomicRing& CyclotomicRing::get(int n_param) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicRing>> rings;
  std::lock_guard lock(mu);
  auto& slot = rings[n_param];
  if (!slot) slot = std::make_unique<CyclotomicRing>(n_param);
  return *slot;
}

const std::vector<std::int64_t>& CyclotomicRing::power(long long e) const {
  const long long period = 2LL * n_param_;
  long long r = e % period;
  if (r < 0) r += period;
  return powers_[static_cast<std::size_t>(r)];
}

CycloElem::CycloElem(const CyclotomicRing& ring, Coords coords) : ring_(&ring), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ring.degree()) {
    throw Error(ErrorKind::InternalInconsistency, "coordinate count does not match phi(2N)");
  }
  normalize();
}

void CycloElem::normalize() {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return;
  }
  coords_.clear();
}

CycloElem CycloElem::from_int(const CyclotomicRing& ring, const BigInt& c) {
  Coords coords(static_cast<std::size_t>(ring.degree()));
  coords[0] = c;
  return CycloElem(ring, std::move(coords));
}

CycloElem CycloElem::reduce(const CyclotomicRing& ring, const LaurentPoly& p) {
  Coords coords(static_cast<std::size_t>(ring.degree()));
  for (const auto& [e, c] : p.terms()) {
    const auto& pw = ring.power(e);
    for (std::size_t i = 0; i < pw.size(); ++i) {
      if (pw[i] != 0) coords[i].add_product(c, BigInt(static_cast<long long>(pw[i])));
    }
  }
  return CycloElem(ring, std::move(coords));
}

std::vector<BigInt> CycloElem::coordinates(const CyclotomicRing& ring) const {
  std::vector<BigInt> out(static_cast<std::size_t>(ring.degree()));
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i];
  return out;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (o.coords_.empty()) return *this;
  if (coords_.empty()) return *this = o;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  normalize();
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  if (o.coords_.empty()) return *this;
  if (coords_.empty()) return *this = -o;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  normalize();
  return *this;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  CycloElem r;
  r.add_product(a, b);
  return r;
}

void CycloElem::add_product(const CycloElem& a, const CycloElem& b) {
  if (a.coords_.empty() || b.coords_.empty()) return;
  const CyclotomicRing& ring = *a.ring_;
  const int d = ring.degree();
  if (coords_.empty()) {
    ring_ = &ring;
    coords_.assign(static_cast<std::size_t>(d), BigInt(0));
  }
  // Schoolbook product; exponents >= d are folded back via the power table.
  BigInt high[16];
  if (d > 17) throw Error(ErrorKind::InvalidParams, "phi(2N) above 17 is not supported");
  for (int i = 0; i < d; ++i) {
    const BigInt& ai = a.coords_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      const BigInt& bj = b.coords_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      const int e = i + j;
      if (e < d) {
        coords_[static_cast<std::size_t>(e)].add_product(ai, bj);
      } else {
        high[e - d].add_product(ai, bj);
      }
    }
  }
  for (int e = d; e <= 2 * d - 2; ++e) {
    const BigInt& c = high[e - d];
    if (c.is_zero()) continue;
    const auto& pw = ring.power(e);
    for (int i = 0; i < d; ++i) {
      if (pw[static_cast<std::size_t>(i)] != 0) {
        coords_[static_cast<std::size_t>(i)].add_product(c, BigInt(static_cast<long long>(pw[static_cast<std::size_t>(i)])));
      }
    }
  }
  normalize();
}

std::optional<CycloElem> CycloElem::divide_exact(const CycloElem& a, const CycloElem& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return CycloElem{};
  const CyclotomicRing& ring = *b.ring_;
  const int d = ring.degree();
  // Solve M x = a over Q where column j of M holds the coordinates of b * q^j.
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d) + 1));
  for (int j = 0; j < d; ++j) {
    Coords basis(static_cast<std::size_t>(d));
    basis[static_cast<std::size_t>(j)] = BigInt(1);
    const CycloElem col = b * CycloElem(ring, basis);
    const auto cc = col.coordinates(ring);
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mpq_class(cc[static_cast<std::size_t>(i)].to_mpz());
  }
  const auto ac = a.coordinates(ring);
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] = mpq_class(ac[static_cast<std::size_t>(i)].to_mpz());
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    while (pivot < d && m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == d) throw Error(ErrorKind::InternalInconsistency, "singular multiplication matrix for a nonzero element");
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
    for (int r = 0; r < d; ++r) {
      if (r == col || m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] == 0) continue;
      const mpq_class f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int k = col; k <= d; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
    }
  }
  Coords x(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    mpq_class v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] / m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    x[static_cast<std::size_t>(i)] = BigInt(mpz_class(v.get_num()));
  }
  return CycloElem(ring, std::move(x));
}

std::complex<double> CycloElem::to_complex() const {
  if (coords_.empty()) return {0.0, 0.0};
  const double theta = std::numbers::pi / ring_->n_param();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    acc += coords_[i].to_double() * std::polar(1.0, theta * static_cast<double>(i));
  }
  return acc;
}

std::string CycloElem::to_string() const {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < coords_.size(); ++i) terms.emplace_back(static_cast<int>(i), coords_[i]);
  return LaurentPoly::from_terms(std::move(terms)).to_string();
}

}  // namespace qloop
