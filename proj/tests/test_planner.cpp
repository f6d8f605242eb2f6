#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "latrec/errors.hpp"
#include "latrec/generate.hpp"
#include "latrec/lll.hpp"
#include "latrec/oracle.hpp"
#include "latrec/planner.hpp"
#include "latrec/verify.hpp"

using namespace latrec;
using namespace latrec::test;

namespace {

const long double kLog43 = 0.41503749927884381854L;  // log2(4/3)

long double half_delta(int k) { return log2_hermite_upper(k) / 2; }

}  // namespace

TEST(Budgets, FullSet) {
  BudgetSet b = full_budgets(5);
  EXPECT_EQ(b.size(), 6u);
  for (std::size_t t = 0; t < b.size(); ++t) {
    EXPECT_EQ(b.values[t], static_cast<long double>(t));
    for (auto [s, l] : b.splits[t]) EXPECT_EQ(b.values[s] + b.values[l], b.values[t]);
  }
  EXPECT_EQ(b.index_at_most(3.5L), 3u);
  EXPECT_FALSE(b.index_of(6).has_value());
}

TEST(Budgets, CoarseBaseTen) {
  BudgetSet b = coarse_budgets(10, 40000);
  for (long double v : {0.0L, 1.0L, 9.0L, 10.0L, 90.0L, 10000.0L, 30000.0L, 40000.0L})
    EXPECT_TRUE(b.index_of(v).has_value()) << static_cast<double>(v);
  for (long double v : {11.0L, 15000.0L, 50000.0L}) EXPECT_FALSE(b.index_of(v).has_value());
  std::size_t t = *b.index_of(40000);
  bool found = false;
  for (auto [s, l] : b.splits[t]) {
    EXPECT_EQ(b.values[s] + b.values[l], 40000.0L);
    found = found || (b.values[s] == 30000 && b.values[l] == 10000);
  }
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_LT(b.values[i - 1], b.values[i]);
}

TEST(Leaves, Values) {
  EXPECT_NEAR(static_cast<double>(lll_leaf_log2(4, 2)), static_cast<double>(kLog43), 1e-15);
  EXPECT_GE(lll_leaf_log2(4, 2), kLog43);
  EXPECT_GE(svp_leaf_log2(10), half_delta(10));
  EXPECT_GE(combine_log2(1, 2, 1, 4), 1.5L);
}

TEST(FixedTable, LllBaseCase) {
  GammaTable g = build_table_fixed_k(6, 2, full_budgets(3));
  EXPECT_EQ(g.value(4, 2, 0), lll_leaf_log2(4, 2));
  EXPECT_EQ(extract_plan(g, 4, 2, 0).action, PlanAction::Lll);
  EXPECT_TRUE(extract_plan(g, 4, 2, 0).children.empty());
}

TEST(FixedTable, RankKLineIsSvpLeaf) {
  for (std::size_t k : {2u, 5u, 10u}) {
    GammaTable g = build_table_fixed_k(k + 2, k, full_budgets(6));
    for (std::size_t c = 1; c <= 6; ++c)
      EXPECT_NEAR(static_cast<double>(g.value(k, 1, c)), static_cast<double>(half_delta(static_cast<int>(k))), 1e-12);
    // at k = 2 the LLL leaf (4/3)^(1/4) ties with sqrt(delta_2) and wins the tie
    if (k == 2) continue;
    for (std::size_t c = 1; c <= 6; ++c) EXPECT_EQ(g.value(k, 1, c), svp_leaf_log2(k));
    PlanNode p = extract_plan(g, k, 1, 1);
    EXPECT_EQ(p.action, PlanAction::Svp);
    EXPECT_TRUE(p.children.empty());
    EXPECT_EQ(to_json(p)["children"].size(), 0u);
  }
}

TEST(FixedTable, RankKUpperLineGoesThroughDual) {
  std::size_t k = 5;
  GammaTable g = build_table_fixed_k(5, k, full_budgets(4));
  TreeEnumerator e(false, k);
  for (std::size_t c = 1; c <= 4; ++c) {
    EXPECT_EQ(g.value(k, k - 1, c), svp_leaf_log2(k));
    EXPECT_EQ(g.value(k, k - 1, c), e.best(k, k - 1, c));
  }
  PlanNode p = extract_plan(g, k, k - 1, 1);
  EXPECT_EQ(p.action, PlanAction::Dual);
  ASSERT_EQ(p.children.size(), 1u);
  EXPECT_EQ(p.children[0].action, PlanAction::Svp);
  EXPECT_EQ(p.children[0].ell, 1u);
}

TEST(FixedTable, EqualsExhaustiveEnumeration) {
  GammaTable g = build_table_fixed_k(6, 2, full_budgets(5));
  TreeEnumerator e(false, 2);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t ell = 1; ell < n; ++ell)
      for (std::size_t c = 0; c <= 5; ++c) EXPECT_EQ(g.value(n, ell, c), e.best(n, ell, c)) << n << ell << c;
}

TEST(FixedTable, ExhaustiveAtLargerBlock) {
  GammaTable g = build_table_fixed_k(8, 3, full_budgets(4));
  TreeEnumerator e(false, 3);
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t ell = 1; ell < n; ++ell)
      for (std::size_t c = 0; c <= 4; ++c) EXPECT_EQ(g.value(n, ell, c), e.best(n, ell, c));
}

TEST(VariableTable, SvpLeafNeedsTimeTwoToTheN) {
  GammaTable g = build_table_variable_k(6, full_budgets(80));
  EXPECT_LE(g.value(6, 1, 64), half_delta(6) + 1e-15L);
  EXPECT_LT(g.value(6, 1, 64), g.value(6, 1, 63));
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t ell = 1; ell < n; ++ell) {
      EXPECT_EQ(g.value(n, ell, 0), std::min(lll_leaf_log2(n, ell), lll_leaf_log2(n, n - ell)));
      EXPECT_EQ(extract_plan(g, n, ell, 0).action, PlanAction::Lll);
    }
}

TEST(VariableTable, EqualsExhaustiveEnumeration) {
  GammaTable g = build_table_variable_k(4, full_budgets(24));
  TreeEnumerator e(true, 0);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t ell = 1; ell < n; ++ell)
      for (std::size_t c = 0; c <= 24; ++c) EXPECT_EQ(g.value(n, ell, c), e.best(n, ell, c));
}

TEST(Tables, MonotoneAndDualitySymmetric) {
  GammaTable g = build_table_fixed_k(20, 4, coarse_budgets(4, 256));
  for (std::size_t n = 4; n <= 20; ++n)
    for (std::size_t ell = 1; ell < n; ++ell)
      for (std::size_t t = 0; t < g.budgets.size(); ++t) {
        if (t > 0) EXPECT_LE(g.value(n, ell, t), g.value(n, ell, t - 1));
        EXPECT_EQ(g.value(n, ell, t), g.value(n, n - ell, t));
      }
}

TEST(Plans, ReevaluateAndRespectBudget) {
  GammaTable g = build_table_fixed_k(24, 6, coarse_budgets(4, 1024));
  for (std::size_t ell : {1u, 3u, 12u, 20u})
    for (std::size_t t = 0; t < g.budgets.size(); t += 3) {
      PlanNode p = extract_plan(g, 24, ell, t);
      EXPECT_EQ(evaluate_plan(p), g.value(24, ell, t));
      EXPECT_LE(plan_cost(p, false), g.budgets.values[t]);
      PlanNode back = plan_from_json(nlohmann::json::parse(to_json(p).dump()));
      EXPECT_EQ(to_json(back), to_json(p));
    }
}

TEST(Plans, JsonShape) {
  GammaTable g = build_table_fixed_k(12, 4, full_budgets(6));
  nlohmann::json j = to_json(extract_plan(g, 12, 1, 6));
  for (const char* f : {"n", "ell", "budget", "action", "children"}) EXPECT_TRUE(j.contains(f));
  EXPECT_EQ(j["action"], "recurse");
  EXPECT_TRUE(j.contains("ell_star"));
  EXPECT_EQ(j["children"].size(), 2u);
  EXPECT_THROW(plan_from_json(nlohmann::json::parse(R"({"n":3})")), std::exception);
}

TEST(Plans, ConcreteTreeAtFifty) {
  GammaTable g = build_table_fixed_k(50, 10, coarse_budgets(10, 40000));
  const BudgetSet& b = g.budgets;
  std::size_t root = *b.index_of(40000);
  long double figure =
      combine_log2(g.value(35, 1, *b.index_of(10000)), g.value(50, 15, *b.index_of(30000)), 1, 35);
  EXPECT_LE(g.value(50, 1, root), figure);
  PlanNode p = extract_plan(g, 50, 1, root);
  EXPECT_EQ(p.action, PlanAction::Recurse);
  EXPECT_EQ(evaluate_plan(p), g.value(50, 1, root));
  EXPECT_LE(plan_cost(p, false), 40000.0L);
}

TEST(Execute, LeavesMatchTheirOracles) {
  Rng rng(3);
  Lattice l = random_lattice(6, 4, LatticeKind::UniformInteger, rng);
  GammaTable g = build_table_fixed_k(6, 6, full_budgets(1));
  ExecuteResult svp = execute_plan(l, extract_plan(g, 6, 1, 1));
  EXPECT_EQ(svp.oracle_calls, 1u);
  EXPECT_EQ(gram_det_sq(svp.output.basis()), gram_det_sq(hsvp_oracle(l).basis()));
  EXPECT_TRUE(svp.bound_ok && svp.budget_ok);
  for (std::size_t ell = 1; ell < 6; ++ell) {
    ExecuteResult lll = execute_plan(l, extract_plan(g, 6, ell, 0));
    EXPECT_EQ(lll.oracle_calls, 0u);
    EXPECT_EQ(lll.output.basis(), lll_dsp_oracle(l, ell).basis());
  }
}

TEST(Execute, RecursivePlansMeetTheirBounds) {
  Rng rng(4);
  GammaTable g = build_table_fixed_k(16, 6, coarse_budgets(4, 64));
  for (int t = 0; t < 4; ++t) {
    Lattice l = random_lattice(16, 4, LatticeKind::UniformInteger, rng);
    for (std::size_t ell : {1u, 5u, 12u}) {
      std::size_t bi = static_cast<std::size_t>(t) * 2 % g.budgets.size();
      PlanNode p = extract_plan(g, 16, ell, bi);
      ExecuteResult r = execute_plan(l, p);
      EXPECT_TRUE(r.bound_ok);
      EXPECT_TRUE(r.budget_ok);
      EXPECT_EQ(r.output.rank(), ell);
      EXPECT_TRUE(is_primitive(r.output));
    }
  }
}

TEST(Execute, ShapeMismatchRejected) {
  Rng rng(5);
  Lattice l = random_lattice(7, 3, LatticeKind::UniformInteger, rng);
  GammaTable g = build_table_fixed_k(8, 4, full_budgets(2));
  EXPECT_THROW(execute_plan(l, extract_plan(g, 8, 1, 2)), Error);
}

TEST(Curve, SinglePointGrid) {
  GammaTable g = build_table_fixed_k(12, 4, full_budgets(0));
  auto pts = curve(g, 12, 1);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].log2_gamma, lll_leaf_log2(12, 1));
  std::ostringstream os;
  write_curve_csv(os, g, 12, 1, pts);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "variant,n,k,ell,budget,log2_gamma");
  EXPECT_EQ(os.str().substr(os.str().find('\n') + 1, 15), "fixed,12,4,1,0,");
}

TEST(Curve, FlatWhenBlockEqualsRank) {
  GammaTable g = build_table_fixed_k(8, 8, coarse_budgets(2, 64));
  auto pts = curve(g, 8, 1);
  for (const auto& p : pts)
    if (p.budget >= 1) EXPECT_EQ(p.log2_gamma, svp_leaf_log2(8));
  GammaTable v = build_table_variable_k(6, coarse_budgets(2, 256));
  for (const auto& p : curve(v, 6, 1))
    if (p.budget >= 64) EXPECT_LE(p.log2_gamma, svp_leaf_log2(6));
  std::ostringstream os;
  write_curve_csv(os, v, 6, 1, curve(v, 6, 1), false);
  EXPECT_EQ(os.str().substr(0, 12), "variable,6,,");
}

TEST(Curve, DominatesExplicitReductionAtThirty) {
  GammaTable g = build_table_fixed_k(30, 10, coarse_budgets(8, 4096));
  auto rows = dominance_rows(g, 30, 1);
  EXPECT_GE(rows.size(), 2u);
  for (const auto& r : rows) EXPECT_TRUE(r.ok) << r.tau;
}
