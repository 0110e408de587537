#include "qloop/chain.hpp"

#include "qloop/errors.hpp"

namespace qloop {

namespace {

using Entry = LaurentOp::Entry;

// sum_j (prod_{i<j} left[d_i]) M_j (prod_{i>j} right[d_i]) for diagonal
// dressings given by their diagonals; empty means identity.
LaurentOp dressed_site_sum(const std::shared_ptr<const ChainSpace>& space, const SiteMatrix& local,
                           const std::vector<LaurentPoly>& left, const std::vector<LaurentPoly>& right) {
  const int length = space->length();
  const int d = space->site_dim();
  std::vector<Entry> entries;
  for (std::uint32_t s = 0; s < space->dim(); ++s) {
    for (int j = 0; j < length; ++j) {
      const int b = space->digit(s, j);
      for (int a = 0; a < d; ++a) {
        const LaurentPoly& m = local[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (m.is_zero()) continue;
        LaurentPoly coeff = m;
        for (int i = 0; i < j && !left.empty(); ++i) coeff *= left[static_cast<std::size_t>(space->digit(s, i))];
        for (int i = j + 1; i < length && !right.empty(); ++i) coeff *= right[static_cast<std::size_t>(space->digit(s, i))];
        entries.push_back(Entry{space->with_digit(s, j, a), s, std::move(coeff)});
      }
    }
  }
  return LaurentOp::from_entries(space, std::move(entries));
}

template <class F>
LaurentOp diagonal(const std::shared_ptr<const ChainSpace>& space, F&& value) {
  std::vector<Entry> entries;
  for (std::uint32_t s = 0; s < space->dim(); ++s) entries.push_back(Entry{s, s, value(s)});
  return LaurentOp::from_entries(space, std::move(entries));
}

std::vector<LaurentPoly> diagonal_of(const SiteMatrix& m) {
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m[i][i]);
  return out;
}

LaurentPoly product_over_sites(const ChainSpace& space, std::uint32_t s, const std::vector<LaurentPoly>& local) {
  LaurentPoly out(1);
  for (int i = 0; i < space.length(); ++i) out *= local[static_cast<std::size_t>(space.digit(s, i))];
  return out;
}

}  // namespace

Rescale Rescale::audit() { return Rescale{LaurentPoly::q(3), -LaurentPoly::q(1)}; }

ChainOperators build_chain_generators(const SiteRep& rep, int length, const Rescale& rescale) {
  ChainOperators ops;
  ops.space = ChainSpace::make(rep.n_param, length, rep.clock);
  const auto& space = ops.space;
  const auto k = diagonal_of(rep.k);
  const auto kinv = diagonal_of(rep.k_inv);
  const auto z = diagonal_of(rep.z);
  const auto zinv = diagonal_of(rep.z_inv);

  ops.E1 = dressed_site_sum(space, rep.e, k, {}).scaled(rescale.beta);
  ops.F1 = dressed_site_sum(space, rep.f, {}, kinv).scaled(rescale.alpha);
  ops.E0 = dressed_site_sum(space, rep.f, kinv, {}).scaled(rescale.alpha);
  ops.F0 = dressed_site_sum(space, rep.e, {}, k).scaled(rescale.beta);

  ops.K = diagonal(space, [&](std::uint32_t s) { return product_over_sites(*space, s, k); });
  ops.K_inv = diagonal(space, [&](std::uint32_t s) { return product_over_sites(*space, s, kinv); });
  ops.A = diagonal(space, [&](std::uint32_t s) { return product_over_sites(*space, s, z); });
  ops.A_inv = diagonal(space, [&](std::uint32_t s) { return product_over_sites(*space, s, zinv); });
  ops.A_half = diagonal(space, [&](std::uint32_t s) { return LaurentPoly::q(space->clock_sum(s)); });
  ops.A_half_inv = diagonal(space, [&](std::uint32_t s) { return LaurentPoly::q(-space->clock_sum(s)); });
  ops.identity = LaurentOp::identity(space, LaurentPoly(1));
  return ops;
}

BarredOperators build_barred_ops(const ChainOperators& ops) {
  const int length = ops.space->length();
  BarredOperators out;
  out.B1 = (ops.A_half * ops.E0).scaled(LaurentPoly::q(length - 2));
  out.BL = (ops.A_half * ops.F1).scaled(LaurentPoly::q(-1));
  out.C0 = (ops.E1 * ops.A_half).scaled(-LaurentPoly::q(length - 2));
  out.CL1 = (ops.F0 * ops.A_half).scaled(-LaurentPoly::q(-1));
  return out;
}

std::map<std::string, LaurentOp> base_operator_table(const SiteRep& rep, int length, const Rescale& rescale) {
  ChainOperators ops = build_chain_generators(rep, length, rescale);
  BarredOperators bar = build_barred_ops(ops);
  return {
      {"E0", std::move(ops.E0)},     {"E1", std::move(ops.E1)},
      {"F0", std::move(ops.F0)},     {"F1", std::move(ops.F1)},
      {"K", std::move(ops.K)},       {"Kinv", std::move(ops.K_inv)},
      {"A", std::move(ops.A)},       {"Ainv", std::move(ops.A_inv)},
      {"Ahalf", std::move(ops.A_half)}, {"Ahalf_inv", std::move(ops.A_half_inv)},
      {"B1", std::move(bar.B1)},     {"BL", std::move(bar.BL)},
      {"C0", std::move(bar.C0)},     {"CL1", std::move(bar.CL1)},
      {"Id", std::move(ops.identity)},
  };
}

int expected_charge(const std::string& name) {
  if (name == "E1" || name == "F0" || name == "C0" || name == "CL1") return -1;
  if (name == "E0" || name == "F1" || name == "B1" || name == "BL") return 1;
  if (name == "K" || name == "Kinv" || name == "A" || name == "Ainv" || name == "Ahalf" || name == "Ahalf_inv" ||
      name == "Id") {
    return 0;
  }
  throw Error(ErrorKind::UnknownId, "unknown operator name: " + name);
}

}  // namespace qloop
