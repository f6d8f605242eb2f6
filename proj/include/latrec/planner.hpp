#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latrec/lattice.hpp"

namespace latrec {

// Budgets in ascending order with, for each budget, the allowed splits
// C = C* + C' as index pairs (right child C*, left child C'), sorted by C*.
struct BudgetSet {
  unsigned base = 0;  // 0 for the full set 0..cap
  std::vector<long double> values;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> splits;

  std::size_t size() const { return values.size(); }
  // Largest index whose value is <= v.
  std::size_t index_at_most(long double v) const;
  std::optional<std::size_t> index_of(long double v) const;
};

BudgetSet full_budgets(std::uint64_t cap);
// All integers <= cap written in base b with all non-leading digits 0.
BudgetSet coarse_budgets(unsigned base, long double cap);

struct CostModel {
  // Oracle time T(k) = 2^k.
  long double oracle_time(std::size_t k) const;
};

enum class PlanAction { Lll, Svp, Dual, Recurse };
const char* plan_action_name(PlanAction a);
PlanAction parse_plan_action(const std::string& s);

struct Choice {
  bool dual = false;  // one duality step, then the direct choice at n - ell
  PlanAction leaf = PlanAction::Lll;  // Lll, Svp or Recurse
  std::uint32_t ell_star = 0;
  std::uint32_t budget_star = 0;  // index of C*
  std::uint32_t budget_left = 0;  // index of C - C*
};

struct Cell {
  long double log2_gamma = 0;
  Choice choice;
};

// Leaf values and the composition rule, shared by the table and by anything
// that re-evaluates a plan.
long double lll_leaf_log2(std::size_t n, std::size_t ell);
long double svp_leaf_log2(std::size_t k);
long double combine_log2(long double left, long double right, std::size_t ell, std::size_t n_left);

class GammaTable {
 public:
  bool variable = false;
  std::size_t k = 0;  // fixed-rank variant only
  std::size_t n_max = 0;
  BudgetSet budgets;
  CostModel cost;

  std::size_t n_min() const { return variable ? 2 : k; }
  bool has(std::size_t n, std::size_t ell, std::size_t t) const;
  const Cell& cell(std::size_t n, std::size_t ell, std::size_t t) const;
  long double value(std::size_t n, std::size_t ell, std::size_t t) const { return cell(n, ell, t).log2_gamma; }

  void allocate();
  Cell& at(std::size_t n, std::size_t ell, std::size_t t);

 private:
  std::vector<std::size_t> offset_;
  std::vector<Cell> cells_;
};

GammaTable build_table_fixed_k(std::size_t n_max, std::size_t k, const BudgetSet& budgets);
GammaTable build_table_variable_k(std::size_t n_max, const BudgetSet& budgets, const CostModel& cost = {});

struct PlanNode {
  std::size_t n = 0, ell = 0;
  long double budget = 0;
  PlanAction action = PlanAction::Lll;
  std::size_t ell_star = 0;
  long double log2_gamma = 0;
  std::vector<PlanNode> children;  // dual: [sub]; recurse: [right, left]
};

PlanNode extract_plan(const GammaTable& table, std::size_t n, std::size_t ell, std::size_t budget_index);
// Bound of the tree recomputed from its leaves.
long double evaluate_plan(const PlanNode& p);
// Oracle calls (fixed rank) or oracle time (variable rank) the tree can consume.
long double plan_cost(const PlanNode& p, bool variable, const CostModel& cost = {});

nlohmann::json to_json(const PlanNode& p);
PlanNode plan_from_json(const nlohmann::json& j);

struct ExecuteParams {
  bool variable = false;
  CostModel cost;
  std::size_t max_oracle_rank = 14;
};

struct ExecuteResult {
  Sublattice output;
  std::uint64_t oracle_calls = 0;
  long double oracle_time = 0;
  DensityRatio ratio;
  bool bound_ok = false;
  bool budget_ok = false;
};

ExecuteResult execute_plan(const Lattice& l, const PlanNode& plan, const ExecuteParams& p = {});

struct CurvePoint {
  long double budget = 0;
  long double log2_gamma = 0;
};

std::vector<CurvePoint> curve(const GammaTable& table, std::size_t n, std::size_t ell);
void write_curve_csv(std::ostream& os, const GammaTable& table, std::size_t n, std::size_t ell,
                     const std::vector<CurvePoint>& pts, bool header = true);

// The explicit DSP->HSVP reduction at depth tau against the table at its call count.
struct DominanceRow {
  int tau = 0;
  std::uint64_t calls = 0;
  long double budget = 0;  // largest table budget <= calls
  long double planner = 0;
  long double theorem = 0;
  bool ok = false;
};

std::vector<DominanceRow> dominance_rows(const GammaTable& table, std::size_t n, std::size_t ell);

std::string format_budget(long double b);

}  // namespace latrec
