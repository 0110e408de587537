#include <gtest/gtest.h>

#include "qloop/errors.hpp"
#include "qloop/serre.hpp"
#include "qloop/suites.hpp"

using namespace qloop;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Dispatch, RegimesPartitionThePositiveGap) {
  for (int n_param = 2; n_param <= 6; ++n_param) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 2 * n + 4 * n_param; ++m) {
        const int gap = m - 2 * n;
        const Regime r = dispatch_regime(n, m, n_param);
        if (gap >= n_param) {
          EXPECT_EQ(r, Regime::id1);
        } else if (gap >= 1) {
          EXPECT_EQ(r, Regime::id2);
        } else {
          EXPECT_EQ(r, Regime::none);
        }
      }
    }
  }
}

TEST(Dispatch, BuildersRejectTheWrongRegime) {
  EXPECT_EQ(kind_of([] { higher_serre_spec(1, 2, Pair::E0_E1); }), ErrorKind::InvalidRegime);
  EXPECT_EQ(kind_of([] { id1_spec(1, 3, Pair::E0_E1, 2); }), ErrorKind::InvalidRegime);
  EXPECT_EQ(kind_of([] { id2_spec(1, 2, Pair::F1_F0, 3); }), ErrorKind::InvalidRegime);
  EXPECT_EQ(kind_of([] { id2_spec(0, 3, Pair::F1_F0, 3); }), ErrorKind::InvalidRegime);
  EXPECT_NO_THROW(id2_spec(0, 2, Pair::F1_F0, 3));
  EXPECT_NO_THROW(id1_spec(0, 3, Pair::E1_E0, 3));
}

TEST(Serre, FTermsHaveAlternatingBinomialShape) {
  const auto terms = lusztig_f_terms("E0", "E1", 1, 3, Norm::q_fact);
  ASSERT_EQ(terms.size(), 4u);
  // r = 0 and r = 3 carry coefficients of opposite sign
  EXPECT_EQ(terms.front().coeff, LaurentPoly(1));
  EXPECT_EQ(terms.back().coeff, -LaurentPoly(1));
}

TEST(Serre, NestedCommutatorWordCoefficients) {
  const auto words = expand_nested_commutator(0, 1, 3);
  std::vector<long long> coeffs;
  for (const auto& w : words) coeffs.push_back(w.coeff);
  std::sort(coeffs.begin(), coeffs.end());
  EXPECT_EQ(coeffs, (std::vector<long long>{-3, -1, 1, 3}));
}

TEST(Serre, LoopGeneratorShapes) {
  const auto g = build_loop_generators(1, 3);
  ASSERT_EQ(g.x_minus.size(), 2u);
  EXPECT_EQ(g.x_minus[0].str(), "C0(1)w");
  EXPECT_EQ(g.x_minus[1].str(), "B1(4)w");
  EXPECT_EQ(g.xbar_plus[0].str(), "BL(1)w");
  EXPECT_EQ(g.xbar_plus[1].str(), "CL1(4)w");
}

TEST(Suites, ResolveExpandsAll) {
  EXPECT_EQ(resolve_suites({"all"}), suite_names());
  EXPECT_EQ(resolve_suites({"site", "id1", "site"}), (std::vector<std::string>{"id1", "site"}));
  EXPECT_EQ(kind_of([] { resolve_suites({"nope"}); }), ErrorKind::ConfigError);
}

TEST(Suites, PlansAreDeterministic) {
  PlanConfig cfg;
  cfg.n_param = 3;
  cfg.length = 4;
  cfg.q_sectors = {0, 2};
  for (const auto& suite : suite_names()) {
    const auto a = plan_suite(suite, cfg);
    const auto b = plan_suite(suite, cfg);
    ASSERT_EQ(a.size(), b.size()) << suite;
    EXPECT_FALSE(a.empty()) << suite;
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(task_label(a[i]), task_label(b[i]));
  }
}

TEST(Suites, SpinHalfSuitesPassAtSmallSize) {
  PlanConfig plan;
  plan.n_param = 2;
  plan.length = 4;
  plan.q_sectors = {0, 1};
  StoreConfig sc;
  sc.n_param = 2;
  sc.length = 4;
  std::vector<Task> tasks;
  for (const char* suite : {"divpow", "id2", "site"}) {
    auto t = plan_suite(suite, plan);
    tasks.insert(tasks.end(), t.begin(), t.end());
  }
  sc.max_order = max_divided_order(tasks);
  OperatorStore<CycloElem> store(sc);
  for (const auto& task : tasks) {
    for (const auto& c : run_task(task, store)) EXPECT_TRUE(c.passed()) << c.id << " " << display(c.params);
  }
}

TEST(Explain, KnownAndUnknownIds) {
  EXPECT_NE(explain("id1").find("m - 2n >= N"), std::string::npos);
  EXPECT_FALSE(explain("mulo").empty());
  EXPECT_FALSE(explain("site_bcbc").empty());
  EXPECT_EQ(kind_of([] { explain("bogus"); }), ErrorKind::UnknownId);
  const auto ids = explainable_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  for (const auto& id : ids) EXPECT_NO_THROW(explain(id)) << id;
}
