#include "latrec/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "latrec/bounds.hpp"
#include "latrec/errors.hpp"
#include "latrec/intmat.hpp"
#include "latrec/lll.hpp"
#include "latrec/oracle.hpp"
#include "latrec/reduce.hpp"

namespace latrec {

std::size_t BudgetSet::index_at_most(long double v) const {
  auto it = std::upper_bound(values.begin(), values.end(), v);
  if (it == values.begin()) fail(ErrorKind::MissingCell, "no budget below " + format_budget(v));
  return static_cast<std::size_t>(it - values.begin()) - 1;
}

std::optional<std::size_t> BudgetSet::index_of(long double v) const {
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

BudgetSet full_budgets(std::uint64_t cap) {
  BudgetSet b;
  b.values.resize(cap + 1);
  b.splits.resize(cap + 1);
  for (std::uint64_t c = 0; c <= cap; ++c) {
    b.values[c] = static_cast<long double>(c);
    for (std::uint64_t s = 0; s < c; ++s)
      b.splits[c].emplace_back(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(c - s));
  }
  return b;
}

BudgetSet coarse_budgets(unsigned base, long double cap) {
  if (base < 2) fail(ErrorKind::InvalidParams, "coarse budget base must be at least 2");
  BudgetSet b;
  b.base = base;
  std::map<std::pair<unsigned, unsigned>, std::uint32_t> idx;  // (digit, exponent) -> index
  std::vector<std::pair<unsigned, unsigned>> digits;
  b.values.push_back(0);
  digits.emplace_back(0, 0);
  long double p = 1;
  for (unsigned a = 0; p <= cap; ++a, p *= base) {
    for (unsigned x = 1; x < base; ++x) {
      long double v = x * p;
      if (v > cap) break;
      idx[{x, a}] = static_cast<std::uint32_t>(b.values.size());
      b.values.push_back(v);
      digits.emplace_back(x, a);
    }
  }
  auto index = [&](unsigned x, unsigned a) -> std::uint32_t {
    if (x == 0) return 0;
    if (x == base) return idx.at({1, a + 1});
    return idx.at({x, a});
  };
  b.splits.resize(b.values.size());
  for (std::size_t i = 1; i < b.values.size(); ++i) {
    auto [x, a] = digits[i];
    if (x == 1) {
      if (a == 0) {
        b.splits[i].emplace_back(0, static_cast<std::uint32_t>(i));
        continue;
      }
      for (unsigned y = 0; y < base; ++y) b.splits[i].emplace_back(index(y, a - 1), index(base - y, a - 1));
    } else {
      for (unsigned z = 0; z < x; ++z) b.splits[i].emplace_back(index(z, a), index(x - z, a));
    }
  }
  return b;
}

long double CostModel::oracle_time(std::size_t k) const { return std::ldexp(1.0L, static_cast<int>(k)); }

const char* plan_action_name(PlanAction a) {
  switch (a) {
    case PlanAction::Lll: return "lll";
    case PlanAction::Svp: return "svp";
    case PlanAction::Dual: return "dual";
    case PlanAction::Recurse: return "recurse";
  }
  return "?";
}

PlanAction parse_plan_action(const std::string& s) {
  if (s == "lll") return PlanAction::Lll;
  if (s == "svp") return PlanAction::Svp;
  if (s == "dual") return PlanAction::Dual;
  if (s == "recurse") return PlanAction::Recurse;
  fail(ErrorKind::Parse, "unknown plan action '" + s + "'");
}

long double lll_leaf_log2(std::size_t n, std::size_t ell) {
  static const long double log2_43 = up(std::log2(4.0L / 3.0L));
  return mul_up(static_cast<long double>(ell * (n - ell)) / 4.0L, log2_43);
}

long double svp_leaf_log2(std::size_t k) { return log2_hermite_upper(static_cast<int>(k)) / 2.0L; }

long double combine_log2(long double left, long double right, std::size_t ell, std::size_t n_left) {
  return add_up(left, mul_up(static_cast<long double>(ell) / static_cast<long double>(n_left), right));
}

bool GammaTable::has(std::size_t n, std::size_t ell, std::size_t t) const {
  return n >= n_min() && n <= n_max && ell >= 1 && ell < n && t < budgets.size();
}

void GammaTable::allocate() {
  offset_.assign(n_max + 2, 0);
  std::size_t total = 0;
  for (std::size_t n = n_min(); n <= n_max; ++n) {
    offset_[n] = total;
    total += (n - 1) * budgets.size();
  }
  cells_.assign(total, Cell{});
}

Cell& GammaTable::at(std::size_t n, std::size_t ell, std::size_t t) {
  return cells_[offset_[n] + (ell - 1) * budgets.size() + t];
}

const Cell& GammaTable::cell(std::size_t n, std::size_t ell, std::size_t t) const {
  if (!has(n, ell, t))
    fail(ErrorKind::MissingCell, "no cell (" + std::to_string(n) + "," + std::to_string(ell) + "," + std::to_string(t) + ")");
  return cells_[offset_[n] + (ell - 1) * budgets.size() + t];
}

namespace {

void fill_table(GammaTable& g) {
  g.allocate();
  std::vector<Cell> direct;
  for (std::size_t t = 0; t < g.budgets.size(); ++t) {
    long double budget = g.budgets.values[t];
    const auto& splits = g.budgets.splits[t];
    for (std::size_t n = g.n_min(); n <= g.n_max; ++n) {
      direct.assign(n, Cell{});
      for (std::size_t ell = 1; ell < n; ++ell) {
        Cell best{lll_leaf_log2(n, ell), Choice{}};
        bool svp_ok = g.variable ? (ell == 1 && budget >= g.cost.oracle_time(n))
                                 : (n == g.k && ell == 1 && budget >= 1);
        if (svp_ok) {
          long double v = svp_leaf_log2(n);
          if (v < best.log2_gamma) best = {v, Choice{false, PlanAction::Svp, 0, 0, 0}};
        }
        std::size_t lo = g.variable ? ell + 1 : std::max(ell + 1, g.k);
        std::size_t hi = n > lo ? n - lo : 0;
        for (std::size_t ls = 1; ls <= hi; ++ls) {
          for (auto [ts, tl] : splits) {
            long double v = combine_log2(g.value(n - ls, ell, tl), g.value(n, ls, ts), ell, n - ls);
            if (v < best.log2_gamma)
              best = {v, Choice{false, PlanAction::Recurse, static_cast<std::uint32_t>(ls), ts, tl}};
          }
        }
        direct[ell] = best;
      }
      for (std::size_t ell = 1; ell < n; ++ell) {
        Cell c = direct[ell];
        if (direct[n - ell].log2_gamma < c.log2_gamma) {
          c = direct[n - ell];
          c.choice.dual = true;
        }
        g.at(n, ell, t) = c;
      }
    }
  }
}

PlanNode plan_node(const GammaTable& g, std::size_t n, std::size_t ell, std::size_t t);

PlanNode direct_node(const GammaTable& g, std::size_t n, std::size_t ell, std::size_t t, const Cell& c) {
  PlanNode p;
  p.n = n;
  p.ell = ell;
  p.budget = g.budgets.values[t];
  p.action = c.choice.leaf;
  p.log2_gamma = c.log2_gamma;
  if (p.action == PlanAction::Recurse) {
    p.ell_star = c.choice.ell_star;
    p.children.push_back(plan_node(g, n, p.ell_star, c.choice.budget_star));
    p.children.push_back(plan_node(g, n - p.ell_star, ell, c.choice.budget_left));
  }
  return p;
}

PlanNode plan_node(const GammaTable& g, std::size_t n, std::size_t ell, std::size_t t) {
  const Cell& c = g.cell(n, ell, t);
  if (!c.choice.dual) return direct_node(g, n, ell, t, c);
  PlanNode p;
  p.n = n;
  p.ell = ell;
  p.budget = g.budgets.values[t];
  p.action = PlanAction::Dual;
  p.log2_gamma = c.log2_gamma;
  p.children.push_back(direct_node(g, n, n - ell, t, c));
  return p;
}

[[noreturn]] void malformed(const std::string& m) { fail(ErrorKind::PlanLatticeMismatch, m); }

void check_shape(const PlanNode& p) {
  if (p.ell < 1 || p.ell >= p.n) malformed("plan node needs 1 <= ell < n");
  switch (p.action) {
    case PlanAction::Lll:
    case PlanAction::Svp:
      if (!p.children.empty()) malformed("leaf with children");
      if (p.action == PlanAction::Svp && p.ell != 1) malformed("svp leaf needs ell = 1");
      break;
    case PlanAction::Dual:
      if (p.children.size() != 1 || p.children[0].n != p.n || p.children[0].ell != p.n - p.ell)
        malformed("dual node must have one child (n, n-ell)");
      break;
    case PlanAction::Recurse:
      if (p.children.size() != 2 || p.ell_star < 1 || p.ell_star >= p.n - p.ell)
        malformed("recurse node must have two children and 1 <= ell* < n-ell");
      if (p.children[0].n != p.n || p.children[0].ell != p.ell_star)
        malformed("right child must be (n, ell*)");
      if (p.children[1].n != p.n - p.ell_star || p.children[1].ell != p.ell)
        malformed("left child must be (n-ell*, ell)");
      break;
  }
}

struct ExecState {
  const ExecuteParams& p;
  std::uint64_t calls = 0;
  long double time = 0;
};

IntMatrix orth_complement(const IntMatrix& z) {
  return intersect_dual_coeffs(rows_primitive(z) ? z : saturate_rows(z));
}

IntMatrix exec(const Lattice& in, const PlanNode& node, ExecState& st) {
  if (in.rank() != node.n)
    malformed("plan expects rank " + std::to_string(node.n) + ", lattice has rank " + std::to_string(in.rank()));
  check_shape(node);
  LllBasis r = lll_reduce(in);
  Lattice l = Lattice::unchecked(std::move(r.basis));
  IntMatrix out;
  switch (node.action) {
    case PlanAction::Lll:
      out = lll_dsp_oracle(l, node.ell).coeffs;
      break;
    case PlanAction::Svp:
      ++st.calls;
      st.time += st.p.cost.oracle_time(node.n);
      out = hsvp_oracle(l, st.p.max_oracle_rank).coeffs;
      break;
    case PlanAction::Dual:
      out = orth_complement(exec(dual(l), node.children[0], st));
      break;
    case PlanAction::Recurse: {
      IntMatrix k = orth_complement(exec(dual(l), node.children[0], st));
      Lattice lp = Lattice::unchecked(mul(k, l.basis));
      out = mul(exec(lp, node.children[1], st), k);
      break;
    }
  }
  return mul(out, r.transform);
}

}  // namespace

GammaTable build_table_fixed_k(std::size_t n_max, std::size_t k, const BudgetSet& budgets) {
  if (k < 2 || n_max < k) fail(ErrorKind::InvalidParams, "fixed-rank table needs n_max >= k >= 2");
  GammaTable g;
  g.k = k;
  g.n_max = n_max;
  g.budgets = budgets;
  fill_table(g);
  return g;
}

GammaTable build_table_variable_k(std::size_t n_max, const BudgetSet& budgets, const CostModel& cost) {
  if (n_max < 2) fail(ErrorKind::InvalidParams, "variable-rank table needs n_max >= 2");
  GammaTable g;
  g.variable = true;
  g.n_max = n_max;
  g.budgets = budgets;
  g.cost = cost;
  fill_table(g);
  return g;
}

PlanNode extract_plan(const GammaTable& table, std::size_t n, std::size_t ell, std::size_t budget_index) {
  return plan_node(table, n, ell, budget_index);
}

long double evaluate_plan(const PlanNode& p) {
  switch (p.action) {
    case PlanAction::Lll: return lll_leaf_log2(p.n, p.ell);
    case PlanAction::Svp: return svp_leaf_log2(p.n);
    case PlanAction::Dual: return evaluate_plan(p.children.at(0));
    case PlanAction::Recurse:
      return combine_log2(evaluate_plan(p.children.at(1)), evaluate_plan(p.children.at(0)), p.ell, p.children.at(1).n);
  }
  return 0;
}

long double plan_cost(const PlanNode& p, bool variable, const CostModel& cost) {
  switch (p.action) {
    case PlanAction::Lll: return 0;
    case PlanAction::Svp: return variable ? cost.oracle_time(p.n) : 1;
    case PlanAction::Dual: return plan_cost(p.children.at(0), variable, cost);
    case PlanAction::Recurse:
      return plan_cost(p.children.at(0), variable, cost) + plan_cost(p.children.at(1), variable, cost);
  }
  return 0;
}

std::string format_budget(long double b) {
  char buf[64];
  if (b == std::floor(b)) std::snprintf(buf, sizeof buf, "%.0Lf", b);
  else std::snprintf(buf, sizeof buf, "%.17Lg", b);
  return buf;
}

nlohmann::json to_json(const PlanNode& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["ell"] = p.ell;
  if (p.budget == std::floor(p.budget) && p.budget < 0x1p63L) j["budget"] = static_cast<std::uint64_t>(p.budget);
  else j["budget"] = static_cast<double>(p.budget);
  j["action"] = plan_action_name(p.action);
  if (p.action == PlanAction::Recurse) j["ell_star"] = p.ell_star;
  j["log2_gamma"] = static_cast<double>(p.log2_gamma);
  nlohmann::json ch = nlohmann::json::array();
  for (const auto& c : p.children) ch.push_back(to_json(c));
  j["children"] = std::move(ch);
  return j;
}

PlanNode plan_from_json(const nlohmann::json& j) {
  try {
    PlanNode p;
    p.n = j.at("n").get<std::size_t>();
    p.ell = j.at("ell").get<std::size_t>();
    const auto& b = j.at("budget");
    p.budget = b.is_number_unsigned() ? static_cast<long double>(b.get<std::uint64_t>())
                                      : static_cast<long double>(b.get<double>());
    p.action = parse_plan_action(j.at("action").get<std::string>());
    if (j.contains("ell_star")) p.ell_star = j.at("ell_star").get<std::size_t>();
    if (j.contains("log2_gamma")) p.log2_gamma = j.at("log2_gamma").get<double>();
    if (j.contains("children"))
      for (const auto& c : j.at("children")) p.children.push_back(plan_from_json(c));
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

ExecuteResult execute_plan(const Lattice& l, const PlanNode& plan, const ExecuteParams& p) {
  ExecState st{p};
  ExecuteResult r;
  IntMatrix z = exec(l, plan, st);
  r.output = Sublattice{l, std::move(z)};
  r.oracle_calls = st.calls;
  r.oracle_time = st.time;
  if (r.output.rank() != plan.ell) fail(ErrorKind::InvariantViolation, "plan output has the wrong rank");
  r.ratio = density_ratio(r.output);
  r.bound_ok = gamma_within_log2(r.ratio, evaluate_plan(plan));
  long double used = p.variable ? st.time : static_cast<long double>(st.calls);
  r.budget_ok = used <= plan.budget;
  return r;
}

std::vector<CurvePoint> curve(const GammaTable& table, std::size_t n, std::size_t ell) {
  std::vector<CurvePoint> out;
  for (std::size_t t = 0; t < table.budgets.size(); ++t) out.push_back({table.budgets.values[t], table.value(n, ell, t)});
  return out;
}

void write_curve_csv(std::ostream& os, const GammaTable& table, std::size_t n, std::size_t ell,
                     const std::vector<CurvePoint>& pts, bool header) {
  if (header) os << "variant,n,k,ell,budget,log2_gamma\n";
  char buf[64];
  for (const auto& pt : pts) {
    std::snprintf(buf, sizeof buf, "%.17Lg", pt.log2_gamma);
    os << (table.variable ? "variable" : "fixed") << ',' << n << ',';
    if (!table.variable) os << table.k;
    os << ',' << ell << ',' << format_budget(pt.budget) << ',' << buf << '\n';
  }
}

std::vector<DominanceRow> dominance_rows(const GammaTable& table, std::size_t n, std::size_t ell) {
  if (table.variable) fail(ErrorKind::InvalidParams, "dominance is defined for the fixed-rank table");
  std::vector<DominanceRow> rows;
  long double cap = table.budgets.values.back();
  for (int tau = 0; tau < 64; ++tau) {
    ReductionParams p;
    p.mode = Mode::Dsp2Hsvp;
    p.k = table.k;
    p.ell = ell;
    p.tau = tau;
    RunStats s = simulate_reduction(p, n);
    if (static_cast<long double>(s.oracle_calls) > cap) break;
    DominanceRow r;
    r.tau = tau;
    r.calls = s.oracle_calls;
    std::size_t t = table.budgets.index_at_most(static_cast<long double>(s.oracle_calls));
    r.budget = table.budgets.values[t];
    r.planner = table.value(n, ell, t);
    r.theorem = theorem_bound(FormulaId::Thm5, n, ell, tau, table.k).log2_gamma_bound;
    r.ok = r.planner <= r.theorem;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace latrec
