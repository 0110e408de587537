#include "qloop/site_rep.hpp"

#include <chrono>

#include "qloop/cyclotomic.hpp"
#include "qloop/errors.hpp"
#include "qloop/qcomb.hpp"

namespace qloop {

namespace {

SiteMatrix zeros(int d) { return SiteMatrix(static_cast<std::size_t>(d), std::vector<LaurentPoly>(static_cast<std::size_t>(d))); }

SiteMatrix diag(const std::vector<LaurentPoly>& v) {
  SiteMatrix m = zeros(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m[i][i] = v[i];
  return m;
}

SiteMatrix mul(const SiteMatrix& a, const SiteMatrix& b) {
  const std::size_t d = a.size();
  SiteMatrix out = zeros(static_cast<int>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j].add_product(a[i][k], b[k][j]);
    }
  }
  return out;
}

SiteMatrix axpy(const SiteMatrix& a, const LaurentPoly& s, const SiteMatrix& b) {
  SiteMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j].add_product(s, b[i][j]);
  }
  return out;
}

SiteMatrix power(const SiteMatrix& a, int n) {
  SiteMatrix out = zeros(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i][i] = LaurentPoly(1);
  for (int i = 0; i < n; ++i) out = mul(out, a);
  return out;
}

struct Gate {
  const SiteRep& rep;
  GateMode mode;

  [[nodiscard]] bool entry_zero(const LaurentPoly& p) const {
    if (mode == GateMode::generic) return p.is_zero();
    return CycloElem::reduce(CyclotomicRing::get(rep.n_param), p).is_zero();
  }

  [[nodiscard]] std::optional<EntryWitness> first_nonzero(const SiteMatrix& m) const {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (entry_zero(m[i][j])) continue;
        std::string value = mode == GateMode::generic
                                ? m[i][j].to_string()
                                : CycloElem::reduce(CyclotomicRing::get(rep.n_param), m[i][j]).to_string();
        return EntryWitness{i, j, std::move(value), -1};
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] IdentityCheck check(const std::string& id, const std::string& anchor, const SiteMatrix& residual) const {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck out;
    out.id = id;
    out.anchor = anchor;
    out.params = {{"backend", std::string(to_string(rep.kind))},
                  {"N", rep.n_param},
                  {"mode", std::string(mode == GateMode::generic ? "generic" : "root_of_unity")}};
    out.witness = first_nonzero(residual);
    out.status = out.witness ? Status::Nonzero : Status::ExactZero;
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
};

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::spin_half: return "spin_half";
    case Backend::highest_weight: return "highest_weight";
    case Backend::cyclic: return "cyclic";
  }
  return "spin_half";
}

std::optional<Backend> backend_from_string(const std::string& s) {
  for (Backend b : {Backend::spin_half, Backend::highest_weight, Backend::cyclic}) {
    if (s == to_string(b)) return b;
  }
  return std::nullopt;
}

SiteRep build_site_rep(Backend kind, int n_param, const LaurentPoly& c) {
  if (n_param < 2) throw Error(ErrorKind::InvalidParams, "N must be at least 2");
  SiteRep rep;
  rep.kind = kind;
  rep.n_param = n_param;
  switch (kind) {
    case Backend::spin_half: {
      // index 0 = up, 1 = down; the up state carries clock -1 so that
      // A_L^{1/2} = q^{-#up} needs no wrap.
      rep.dim = 2;
      rep.clock = {-1, 0};
      rep.e = zeros(2);
      rep.f = zeros(2);
      rep.e[0][1] = LaurentPoly(1);
      rep.f[1][0] = LaurentPoly(1);
      rep.k = diag({LaurentPoly::q(1), LaurentPoly::q(-1)});
      rep.k_inv = diag({LaurentPoly::q(-1), LaurentPoly::q(1)});
      break;
    }
    case Backend::highest_weight: {
      const int d = n_param;
      rep.dim = d;
      rep.e = zeros(d);
      rep.f = zeros(d);
      std::vector<LaurentPoly> k, kinv;
      for (int n = 0; n < d; ++n) {
        rep.clock.push_back(n);
        if (n > 0) rep.e[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n)] = q_int(d - n);
        if (n + 1 < d) rep.f[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(n)] = q_int(n + 1);
        k.push_back(LaurentPoly::q(d - 1 - 2 * n));
        kinv.push_back(LaurentPoly::q(-(d - 1 - 2 * n)));
      }
      rep.k = diag(k);
      rep.k_inv = diag(kinv);
      break;
    }
    case Backend::cyclic: {
      const int d = n_param;
      rep.dim = d;
      rep.c = c;
      rep.generic_valid = false;
      rep.wraps = true;
      rep.e = zeros(d);
      rep.f = zeros(d);
      std::vector<LaurentPoly> k, kinv;
      for (int n = 0; n < d; ++n) {
        rep.clock.push_back(n);
        const auto up = static_cast<std::size_t>((n + 1) % d);
        const auto down = static_cast<std::size_t>((n + d - 1) % d);
        rep.f[up][static_cast<std::size_t>(n)] = LaurentPoly(1);
        const LaurentPoly qn = q_int(n);
        rep.e[down][static_cast<std::size_t>(n)] = c - qn * qn;
        k.push_back(LaurentPoly::q(-(2 * n + 1)));
        kinv.push_back(LaurentPoly::q(2 * n + 1));
      }
      rep.k = diag(k);
      rep.k_inv = diag(kinv);
      break;
    }
    default:
      throw Error(ErrorKind::UnsupportedKind, "unknown site representation");
  }
  std::vector<LaurentPoly> z, zinv;
  for (int w : rep.clock) {
    z.push_back(LaurentPoly::q(2 * w));
    zinv.push_back(LaurentPoly::q(-2 * w));
  }
  rep.z = diag(z);
  rep.z_inv = diag(zinv);
  return rep;
}

std::vector<IdentityCheck> rep_self_check(const SiteRep& rep, GateMode mode) {
  const Gate gate{rep, mode};
  const LaurentPoly one(1);
  const LaurentPoly q = LaurentPoly::q(1);
  const LaurentPoly qinv = LaurentPoly::q(-1);
  std::vector<IdentityCheck> out;

  out.push_back(gate.check("site.k_e", "k' e' k'^-1 = q^2 e'",
                           axpy(mul(mul(rep.k, rep.e), rep.k_inv), -LaurentPoly::q(2), rep.e)));
  out.push_back(gate.check("site.k_f", "k' f' k'^-1 = q^-2 f'",
                           axpy(mul(mul(rep.k, rep.f), rep.k_inv), -LaurentPoly::q(-2), rep.f)));
  {
    const SiteMatrix comm = axpy(mul(rep.e, rep.f), -one, mul(rep.f, rep.e));
    const SiteMatrix lhs = axpy(zeros(rep.dim), q - qinv, comm);
    out.push_back(gate.check("site.e_f", "(q - q^-1)[e', f'] = k' - k'^-1",
                             axpy(axpy(lhs, -one, rep.k), one, rep.k_inv)));
  }
  out.push_back(gate.check("site.z_e", "Z e' Z^-1 = omega^-1 e'",
                           axpy(mul(mul(rep.z, rep.e), rep.z_inv), -LaurentPoly::q(-2), rep.e)));
  out.push_back(gate.check("site.z_f", "Z f' Z^-1 = omega f'",
                           axpy(mul(mul(rep.z, rep.f), rep.z_inv), -LaurentPoly::q(2), rep.f)));

  if (mode == GateMode::root_of_unity) {
    SiteMatrix ident = zeros(rep.dim);
    for (int i = 0; i < rep.dim; ++i) ident[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;
    out.push_back(gate.check("site.z_order", "Z^N = 1", axpy(power(rep.z, rep.n_param), -one, ident)));

    const SiteMatrix plus = axpy(rep.k, -qinv, rep.z_inv);
    const SiteMatrix minus = axpy(rep.k, qinv, rep.z_inv);
    IdentityCheck sign = gate.check("site.k_z", "k' = s q^-1 Z^-1 with s = +1 or -1", plus);
    if (sign.status == Status::ExactZero) {
      sign.note = "sign=+";
    } else if (!gate.first_nonzero(minus)) {
      sign.status = Status::ExactZero;
      sign.witness.reset();
      sign.note = "sign=-";
    } else {
      sign.note = "neither sign holds";
    }
    out.push_back(std::move(sign));
  }
  return out;
}

}  // namespace qloop
