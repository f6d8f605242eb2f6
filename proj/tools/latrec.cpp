#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "latrec/errors.hpp"
#include "latrec/generate.hpp"
#include "latrec/lattice.hpp"
#include "latrec/oracle.hpp"
#include "latrec/planner.hpp"
#include "latrec/reduce.hpp"
#include "latrec/verify.hpp"

using namespace latrec;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvariantViolation:
    case ErrorKind::MissingCell: return kExitInvariant;
    default: return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

std::size_t max_oracle_rank_or_env(std::size_t flag) { return flag ? flag : default_max_oracle_rank(); }

struct GenArgs {
  std::size_t rank = 0;
  unsigned bits = 1;
  std::string kind = "uniform-integer";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  if (a.rank < 1 || a.bits < 1) fail(ErrorKind::InvalidParams, "rank and bits must be at least 1");
  Rng rng(a.seed);
  Lattice l = random_lattice(a.rank, a.bits, parse_kind(a.kind), rng);
  write_text(a.out, to_json(l).dump() + "\n");
  if (!a.out.empty() && a.out != "-")
    std::cout << json{{"rng", kRngAlgorithm}, {"seed", a.seed}, {"kind", a.kind}, {"rank", a.rank},
                      {"bits", a.bits}, {"out", a.out}}.dump()
              << "\n";
  return kExitOk;
}

struct ReduceArgs {
  std::string in;
  std::string mode = "hsvp2hsvp";
  std::size_t k = 2, ell = 1;
  int tau = 0;
  std::string trace, out;
  std::size_t max_oracle_rank = 0;
  bool monitor_beta = false;
};

json stats_json(const RunStats& s) {
  return {{"oracle_calls", s.oracle_calls},   {"lll_calls", s.lll_calls},
          {"duality_steps", s.duality_steps}, {"nodes", s.nodes},
          {"max_bitlength_seen", s.max_bitlength_seen}, {"depth_reached", s.depth_reached},
          {"max_path_recursions", s.max_path_recursions}, {"beta_checks", s.beta_checks}};
}

int cmd_reduce(const ReduceArgs& a) {
  Lattice l = lattice_from_json(read_json(a.in));
  ReductionParams p;
  p.mode = parse_mode(a.mode);
  p.k = a.k;
  p.ell = a.ell;
  p.tau = a.tau;
  p.max_oracle_rank = max_oracle_rank_or_env(a.max_oracle_rank);
  p.monitor_beta = a.monitor_beta;
  std::unique_ptr<std::ofstream> trace;
  if (!a.trace.empty()) {
    trace = std::make_unique<std::ofstream>(a.trace, std::ios::binary);
    if (!*trace) fail(ErrorKind::Parse, "cannot write " + a.trace);
    p.trace = trace.get();
  }
  ReductionResult r = run_reduction(l, p);
  json report = {{"mode", a.mode},
                 {"n", l.rank()},
                 {"k", a.k},
                 {"ell", r.output.rank()},
                 {"tau", a.tau},
                 {"stats", stats_json(r.stats)},
                 {"log2_gamma", r.ratio.log2_gamma_sq() / 2},
                 {"log2_gamma_bound", static_cast<double>(r.bound.log2_gamma_bound)},
                 {"status", r.bound_ok ? "PASS" : "FAIL"}};
  if (!a.out.empty()) {
    json result = {{"lattice", to_json(r.output.lattice())}, {"coeffs", to_json(r.output.coeffs)}, {"report", report}};
    write_text(a.out, result.dump() + "\n");
  }
  std::cout << report.dump() << "\n";
  return r.bound_ok ? kExitOk : kExitInvariant;
}

struct PlanArgs {
  std::size_t n = 0, k = 0, ell = 1;
  bool variable = false;
  double budget = 0;
  unsigned base = 0;
  std::string out;
};

GammaTable plan_table(const PlanArgs& a) {
  if (a.n < 2 || a.ell < 1 || a.ell >= a.n) fail(ErrorKind::InvalidParams, "requires 1 <= ell < n");
  if (a.budget < 0) fail(ErrorKind::InvalidParams, "budget must be nonnegative");
  if (a.base == 1) fail(ErrorKind::InvalidParams, "base must be 0 (full grid) or at least 2");
  long double cap = static_cast<long double>(a.budget);
  BudgetSet b = a.base ? coarse_budgets(a.base, cap) : full_budgets(static_cast<std::uint64_t>(a.budget));
  if (a.variable) return build_table_variable_k(a.n, b);
  if (a.k < 2 || a.k > a.n) fail(ErrorKind::InvalidParams, "requires 2 <= k <= n");
  return build_table_fixed_k(a.n, a.k, b);
}

int cmd_plan(const PlanArgs& a) {
  GammaTable g = plan_table(a);
  std::size_t t = g.budgets.index_at_most(static_cast<long double>(a.budget));
  write_text(a.out, to_json(extract_plan(g, a.n, a.ell, t)).dump() + "\n");
  return kExitOk;
}

int cmd_curve(const PlanArgs& a) {
  GammaTable g = plan_table(a);
  std::ostringstream os;
  write_curve_csv(os, g, a.n, a.ell, curve(g, a.n, a.ell));
  write_text(a.out, os.str());
  return kExitOk;
}

struct ExecArgs {
  std::string in, plan, out;
  bool variable = false;
  std::size_t max_oracle_rank = 0;
};

int cmd_execute(const ExecArgs& a) {
  Lattice l = lattice_from_json(read_json(a.in));
  PlanNode plan = plan_from_json(read_json(a.plan));
  ExecuteParams p;
  p.variable = a.variable;
  p.max_oracle_rank = max_oracle_rank_or_env(a.max_oracle_rank);
  ExecuteResult r = execute_plan(l, plan, p);
  bool ok = r.bound_ok && r.budget_ok;
  json report = {{"n", l.rank()},
                 {"ell", plan.ell},
                 {"oracle_calls", r.oracle_calls},
                 {"oracle_time", static_cast<double>(r.oracle_time)},
                 {"log2_gamma", r.ratio.log2_gamma_sq() / 2},
                 {"planned_log2_gamma", static_cast<double>(evaluate_plan(plan))},
                 {"bound_ok", r.bound_ok},
                 {"budget_ok", r.budget_ok},
                 {"status", ok ? "PASS" : "FAIL"}};
  if (!a.out.empty()) {
    json result = {{"lattice", to_json(r.output.lattice())}, {"coeffs", to_json(r.output.coeffs)}, {"report", report}};
    write_text(a.out, result.dump() + "\n");
  }
  std::cout << report.dump() << "\n";
  return ok ? kExitOk : kExitInvariant;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions o{a.sizes, a.seed, a.cases};
  std::vector<std::string> suites = a.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  json props = json::array();
  bool ok = true;
  for (const auto& s : suites)
    for (const auto& r : run_suite(s, o)) {
      ok = ok && r.pass();
      props.push_back(r.to_json());
    }
  json report = {{"rng", kRngAlgorithm}, {"seed", a.seed}, {"sizes", a.sizes}, {"cases", a.cases},
                 {"properties", props},  {"status", ok ? "PASS" : "FAIL"}};
  write_text(a.out, report.dump(2) + "\n");
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursive lattice reduction toolkit"};
  app.require_subcommand(1);
  int rc = kExitOk;

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random full-rank integer lattice");
  gen->add_option("--rank", ga.rank, "Rank n")->required();
  gen->add_option("--bits", ga.bits, "Entry size in bits")->required();
  gen->add_option("--kind", ga.kind, "uniform-integer or qary-like");
  gen->add_option("--seed", ga.seed, "64-bit seed");
  gen->add_option("--out", ga.out, "Output path (default stdout)");

  ReduceArgs ra;
  auto* red = app.add_subcommand("reduce", "Run one of the recursive reductions");
  red->add_option("--in", ra.in, "Lattice JSON")->required();
  red->add_option("--mode", ra.mode, "hsvp2hsvp, dsp2dsp or dsp2hsvp");
  red->add_option("--k", ra.k, "Oracle rank");
  red->add_option("--ell", ra.ell, "Sublattice rank");
  red->add_option("--tau", ra.tau, "Depth parameter");
  red->add_option("--trace", ra.trace, "JSON-lines trace path");
  red->add_option("--max-oracle-rank", ra.max_oracle_rank, "Largest oracle rank allowed");
  red->add_flag("--monitor-beta", ra.monitor_beta, "Check size bounds at every step");
  red->add_option("--out", ra.out, "Result JSON path");

  PlanArgs pa;
  auto add_plan_flags = [&](CLI::App* c) {
    c->add_option("--n", pa.n, "Rank")->required();
    auto* k = c->add_option("--k", pa.k, "Fixed oracle rank");
    auto* v = c->add_flag("--variable", pa.variable, "Variable oracle rank, time 2^k per call");
    k->excludes(v);
    c->add_option("--ell", pa.ell, "Sublattice rank");
    c->add_option("--budget", pa.budget, "Budget cap")->required();
    c->add_option("--base", pa.base, "Coarse grid base (0: every integer)");
    c->add_option("--out", pa.out, "Output path (default stdout)");
  };
  auto* plan = app.add_subcommand("plan", "Optimal reduction tree as JSON");
  add_plan_flags(plan);
  auto* crv = app.add_subcommand("curve", "Bound against budget as CSV");
  add_plan_flags(crv);

  ExecArgs ea;
  auto* exe = app.add_subcommand("execute", "Run a plan on a lattice");
  exe->add_option("--in", ea.in, "Lattice JSON")->required();
  exe->add_option("--plan", ea.plan, "Plan JSON")->required();
  exe->add_flag("--variable", ea.variable, "Plan budgets are oracle time");
  exe->add_option("--max-oracle-rank", ea.max_oracle_rank, "Largest oracle rank allowed");
  exe->add_option("--out", ea.out, "Result JSON path");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run property suites");
  ver->add_option("--suite", va.suites, "Suite names or all")->delimiter(',');
  ver->add_option("--sizes", va.sizes, "Ranks to sample")->delimiter(',');
  ver->add_option("--seed", va.seed, "64-bit seed");
  ver->add_option("--cases", va.cases, "Cases per property (0: suite default)");
  ver->add_option("--out", va.out, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) rc = cmd_gen(ga);
    else if (*red) rc = cmd_reduce(ra);
    else if (*plan) rc = cmd_plan(pa);
    else if (*crv) rc = cmd_curve(pa);
    else if (*exe) rc = cmd_execute(ea);
    else if (*ver) rc = cmd_verify(va);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return rc;
}
