#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "qloop/chain.hpp"
#include "qloop/divpow.hpp"
#include "qloop/identity.hpp"
#include "qloop/operator_store.hpp"
#include "qloop/serre.hpp"
#include "qloop/site_rep.hpp"

using namespace qloop;

namespace {

StoreConfig laurent_cfg(Backend b, int n_param, int length) {
  StoreConfig cfg;
  cfg.backend = b;
  cfg.n_param = n_param;
  cfg.length = length;
  cfg.ring = RingMode::laurent;
  cfg.max_order = 2 * n_param + 2;
  return cfg;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qloop_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(SiteRep, GenericRelationsHold) {
  for (Backend b : {Backend::spin_half, Backend::highest_weight}) {
    for (int n = 2; n <= 5; ++n) {
      const auto rep = build_site_rep(b, n);
      for (GateMode mode : {GateMode::generic, GateMode::root_of_unity}) {
        for (const auto& c : rep_self_check(rep, mode)) EXPECT_TRUE(c.passed()) << to_string(b) << " " << c.id;
      }
    }
  }
}

TEST(SiteRep, CyclicFailsGenericCommutator) {
  const auto rep = build_site_rep(Backend::cyclic, 3, LaurentPoly(0));
  EXPECT_FALSE(rep.generic_valid);
  bool any_failed = false;
  for (const auto& c : rep_self_check(rep, GateMode::generic)) any_failed |= !c.passed();
  EXPECT_TRUE(any_failed);
  for (const auto& c : rep_self_check(rep, GateMode::root_of_unity)) EXPECT_TRUE(c.passed()) << c.id;
}

TEST(Chain, RelationsAndGrading) {
  for (Backend b : {Backend::spin_half, Backend::highest_weight}) {
    for (int n = 2; n <= 3; ++n) {
      const int max_length = b == Backend::spin_half ? 6 : 3;
      for (int length = 1; length <= max_length; ++length) {
        OperatorStore<LaurentPoly> store(laurent_cfg(b, n, length));
        for (const auto& spec : chain_gate_specs()) {
          const auto c = evaluate(spec, store);
          EXPECT_TRUE(c.passed()) << to_string(b) << " N=" << n << " L=" << length << " " << c.id;
        }
        for (const char* which : {"C0", "CL1", "B1", "BL"}) {
          const auto c = evaluate(half_commute_spec(which), store);
          EXPECT_TRUE(c.passed()) << "L=" << length << " " << c.id;
        }
      }
    }
  }
}

TEST(Chain, GeneratorCharges) {
  const auto table = base_operator_table(build_site_rep(Backend::spin_half, 3), 4);
  const auto& space = table.at("E0").space();
  for (const auto& [name, op] : table) {
    if (op.is_zero()) continue;
    EXPECT_EQ(op.charge(), space->shift(expected_charge(name), 0)) << name;
  }
}

TEST(Chain, RescaleOnlyScalesGenerators) {
  const auto rep = build_site_rep(Backend::spin_half, 2);
  const auto plain = build_chain_generators(rep, 3);
  const auto scaled = build_chain_generators(rep, 3, Rescale::audit());
  EXPECT_EQ(serialize_operator(scaled.E0), serialize_operator(plain.E0.scaled(LaurentPoly::q(3))));
  EXPECT_EQ(serialize_operator(scaled.F0), serialize_operator(plain.F0.scaled(-LaurentPoly::q(1))));
  EXPECT_EQ(serialize_operator(scaled.K), serialize_operator(plain.K));
}

TEST(DivPow, DividedPowerTimesFactorialIsPower) {
  const auto ops = build_chain_generators(build_site_rep(Backend::spin_half, 3), 4);
  auto power = ops.identity;
  for (int n = 1; n <= 4; ++n) {
    power = power * ops.E0;
    for (Norm norm : {Norm::q_fact, Norm::omega_fact}) {
      const auto dp = divided_power(ops.E0, n, norm);
      EXPECT_EQ(serialize_operator(dp.scaled(norm_factorial(n, norm))), serialize_operator(power)) << n;
    }
  }
  EXPECT_TRUE(divided_power(ops.E0, 5, Norm::q_fact).is_zero());
}

TEST(DivPow, SpecIdentities) {
  OperatorStore<CycloElem> store([] {
    auto cfg = laurent_cfg(Backend::spin_half, 2, 4);
    cfg.ring = RingMode::cyclotomic;
    return cfg;
  }());
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(evaluate(power_factorial_spec("B1", n, Norm::omega_fact), store).passed()) << n;
    EXPECT_TRUE(evaluate(power_factorial_spec("E1", n, Norm::q_fact), store).passed()) << n;
  }
  for (const char* op : {"E0", "E1", "F0", "F1", "B1", "C0"}) {
    const auto c = evaluate(nilpotent_spec(op, 5, Norm::q_fact), store);
    EXPECT_EQ(c.status, Status::ExactZero) << op;
  }
  EXPECT_TRUE(evaluate(mulo_spec(1, 2, 1, 2), store).passed());
}

TEST(DivPow, PhiAdicRouteAgreesWithLaurentRoute) {
  OperatorStore<CycloElem> store([] {
    auto cfg = laurent_cfg(Backend::spin_half, 2, 6);
    cfg.ring = RingMode::cyclotomic;
    return cfg;
  }());
  for (int n = 1; n <= 6; ++n) {
    for (const char* op : {"E0", "F1"}) {
      const auto a = store.specialised_via(Symbolic::laurent, op, Norm::q_fact, n);
      const auto b = store.specialised_via(Symbolic::phi_adic, op, Norm::q_fact, n);
      EXPECT_EQ(serialize_operator(a), serialize_operator(b)) << op << " " << n;
    }
  }
}

TEST(Store, SerializationRoundTrip) {
  const auto ops = build_chain_generators(build_site_rep(Backend::highest_weight, 3), 2);
  const auto op = LaurentOp::axpy(ops.E0 * ops.E1, LaurentPoly::q(2), ops.K);
  const auto text = serialize_operator(op);
  EXPECT_EQ(serialize_operator(deserialize_operator<LaurentPoly>(text, ops.space)), text);

  const auto cyc = reduce_cyclotomic(op);
  const auto ctext = serialize_operator(cyc);
  EXPECT_EQ(serialize_operator(deserialize_operator<CycloElem>(ctext, ops.space)), ctext);
}

TEST(Store, DiskCacheIsReused) {
  const auto dir = fresh_dir("cache");
  auto cfg = laurent_cfg(Backend::spin_half, 2, 4);
  cfg.ring = RingMode::cyclotomic;
  cfg.cache_dir = dir.string();
  const OpKey key = dp_omega("B1", 3);
  std::string first;
  {
    OperatorStore<CycloElem> store(cfg);
    first = serialize_operator(*store.get(key));
    EXPECT_GT(store.stats().disk_writes, 0u);
  }
  {
    OperatorStore<CycloElem> store(cfg);
    EXPECT_EQ(serialize_operator(*store.get(key)), first);
    EXPECT_GT(store.stats().disk_hits, 0u);
  }
  // a different chain must not pick up the entry
  auto other = cfg;
  other.length = 3;
  OperatorStore<CycloElem> store(other);
  EXPECT_NE(store.cache_key(key), OperatorStore<CycloElem>(cfg).cache_key(key));
  std::filesystem::remove_all(dir);
}

TEST(Nested, ExpansionMatchesDirectCommutator) {
  const auto words = expand_nested_commutator(0, 1, 3);
  ASSERT_EQ(words.size(), 4u);

  using M = std::vector<std::vector<long long>>;
  auto mul = [](const M& a, const M& b) {
    const std::size_t n = a.size();
    M c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto sub = [](M a, const M& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
    return a;
  };
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    M mats[2];
    for (auto& m : mats) {
      m.assign(n, std::vector<long long>(n));
      for (auto& row : m)
        for (auto& x : row) x = d(rng);
    }
    M direct = mats[0];
    for (int i = 0; i < 3; ++i) direct = sub(mul(direct, mats[1]), mul(mats[1], direct));

    M expanded(n, std::vector<long long>(n, 0));
    for (const auto& w : words) {
      M prod = mats[w.letters.front()];
      for (std::size_t i = 1; i < w.letters.size(); ++i) prod = mul(prod, mats[w.letters[i]]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) expanded[i][j] += w.coeff * prod[i][j];
    }
    ASSERT_EQ(expanded, direct);
  }
}
