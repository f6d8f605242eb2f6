#include "latrec/reduce.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "latrec/bounds.hpp"
#include "latrec/engine.hpp"
#include "latrec/errors.hpp"
#include "latrec/intmat.hpp"
#include "latrec/lll.hpp"
#include "latrec/oracle.hpp"
#include "latrec/repr.hpp"

namespace latrec {

namespace {

class ExactBackend {
 public:
  using Lat = Lattice;
  using Sub = IntMatrix;

  struct Prepared {
    Lattice lat;
    IntMatrix u;
    bool has_u = false;
  };

  ExactBackend(const ReductionParams& p, const Lattice& root) : p_(p), n0_(root.rank()) {
    if (p_.monitor_beta) b0_ = size_profile(root).log2_beta;
  }

  std::size_t max_bitlength = 0;
  std::uint64_t beta_checks = 0;

  Prepared enter(const Lattice& in, const NodeCtx& ctx) {
    Prepared pr;
    note_bits(in.basis);
    if (p_.lll_each_node) {
      LllBasis r = lll_reduce(in);
      pr.lat = Lattice::unchecked(std::move(r.basis));
      pr.u = std::move(r.transform);
      pr.has_u = true;
      note_bits(pr.lat.basis);
    } else {
      pr.lat = in;
    }
    if (p_.monitor_beta) {
      ++beta_checks;
      double beta = size_profile(pr.lat).log2_beta;
      if (!beta_path_bound(beta, b0_, n0_, ctx.duals, ctx.inters))
        fail(ErrorKind::InvariantViolation, "beta exceeds (4n)^D (b0 + I n^2/2) at " + where(ctx));
    }
    return pr;
  }

  IntMatrix leave(IntMatrix out, const Prepared& pr) const {
    if (!pr.has_u) return out;
    return mul(out, pr.u);
  }

  std::size_t rank(const Lattice& l) const { return l.rank(); }

  Lattice dual(const Lattice& l, const NodeCtx& ctx) {
    Lattice d = latrec::dual(l);
    if (p_.monitor_beta) check_step(l, StepOp::Dual, d, ctx);
    return d;
  }

  IntMatrix lll_prefix(const Lattice& l, std::size_t ell) const { return lll_dsp_oracle(l, ell).coeffs; }

  IntMatrix svp(const Lattice& l) const { return hsvp_oracle(l, p_.max_oracle_rank).coeffs; }

  IntMatrix dsp_oracle(const Lattice& l, std::size_t ell) const { return lll_dsp_oracle(l, ell).coeffs; }

  std::pair<Lattice, IntMatrix> intersect(const Lattice& l, const IntMatrix& w, const NodeCtx& ctx) {
    IntMatrix k = complement(l, w);
    Lattice lp = Lattice::unchecked(mul(k, l.basis));
    if (p_.monitor_beta) check_step(l, StepOp::Intersect, lp, ctx);
    return {std::move(lp), std::move(k)};
  }

  IntMatrix complement(const Lattice&, const IntMatrix& z) const {
    IntMatrix zp = rows_primitive(z) ? z : saturate_rows(z);
    return intersect_dual_coeffs(zp);
  }

  IntMatrix compose(const IntMatrix& y, const IntMatrix& k) const { return mul(y, k); }

  void on_exit(const NodeCtx& ctx, Action a, const Lattice& l, const IntMatrix& out) const {
    if (!p_.trace) return;
    RatMatrix sub = mul(out, l.basis);
    SizeProfile sp = size_profile(l);
    nlohmann::json rec = {{"mode", mode_name(ctx.mode)},
                          {"n", ctx.n},
                          {"ell", ctx.ell},
                          {"tau", ctx.tau},
                          {"depth", ctx.depth},
                          {"action", action_name(a)},
                          {"bitlength", bitlength(sub)},
                          {"log2_gamma_sq_exact", density_ratio(l, sub).log2_gamma_sq()},
                          {"q_bits", bitlength(sp.q)},
                          {"beta", sp.log2_beta},
                          {"basis_bits", bitlength(l.basis)}};
    *p_.trace << rec.dump() << '\n';
  }

 private:
  void note_bits(const RatMatrix& b) {
    std::size_t bits = bitlength(b);
    if (bits > max_bitlength) max_bitlength = bits;
  }

  static std::string where(const NodeCtx& c) {
    return "(" + std::to_string(c.n) + "," + std::to_string(c.ell) + "," + std::to_string(c.tau) + ")";
  }

  void check_step(const Lattice& before, StepOp op, const Lattice& after, const NodeCtx& ctx) {
    ++beta_checks;
    if (!beta_step_bounds(size_profile(before), op, size_profile(after), before.rank()))
      fail(ErrorKind::InvariantViolation,
           std::string(op == StepOp::Dual ? "dual" : "intersection") + " step exceeds its beta bound at " + where(ctx));
  }

  const ReductionParams& p_;
  std::size_t n0_;
  double b0_ = 0;
};

class SymbolicBackend {
 public:
  using Lat = std::size_t;
  using Sub = std::size_t;

  struct Prepared {
    std::size_t lat;
  };

  Prepared enter(std::size_t n, const NodeCtx&) const { return {n}; }
  std::size_t leave(std::size_t out, const Prepared&) const { return out; }
  std::size_t rank(std::size_t n) const { return n; }
  std::size_t dual(std::size_t n, const NodeCtx&) const { return n; }
  std::size_t lll_prefix(std::size_t, std::size_t ell) const { return ell; }
  std::size_t svp(std::size_t) const { return 1; }
  std::size_t dsp_oracle(std::size_t, std::size_t ell) const { return ell; }
  std::pair<std::size_t, std::size_t> intersect(std::size_t n, std::size_t w, const NodeCtx&) const {
    return {n - w, n - w};
  }
  std::size_t complement(std::size_t n, std::size_t z) const { return n - z; }
  std::size_t compose(std::size_t y, std::size_t) const { return y; }
  void on_exit(const NodeCtx&, Action, std::size_t, std::size_t) const {}
};

std::size_t expected_rank(const ReductionParams& p) { return p.mode == Mode::Hsvp2Hsvp ? 1 : p.ell; }

ReductionResult run_mode(const Lattice& l, const ReductionParams& p, Mode m) {
  ReductionParams q = p;
  q.mode = m;
  std::size_t n = l.rank();
  validate(q, n);
  bool needs_oracle = m != Mode::Dsp2Dsp && (q.tau > 0 || (m == Mode::Dsp2Hsvp && n == q.k));
  if (needs_oracle && q.k > q.max_oracle_rank)
    fail(ErrorKind::RankTooLarge, "oracle rank " + std::to_string(q.k) + " exceeds maximum " +
                                      std::to_string(q.max_oracle_rank));
  ExactBackend be(q, l);
  Engine<ExactBackend> eng(be, q, n);
  IntMatrix z = eng.run(l);
  ReductionResult r;
  r.output = Sublattice{l, std::move(z)};
  r.stats = eng.stats;
  r.stats.max_bitlength_seen = be.max_bitlength;
  r.stats.beta_checks = be.beta_checks;
  std::size_t ell = expected_rank(q);
  if (r.output.rank() != ell) fail(ErrorKind::InvariantViolation, "output has the wrong rank");
  if (!is_primitive(r.output)) fail(ErrorKind::InvariantViolation, "output sublattice is not primitive");
  r.bound = theorem_bound(formula_for(m), n, ell, q.tau, q.k);
  r.ratio = density_ratio(r.output);
  r.bound_ok = gamma_within_log2(r.ratio, r.bound.log2_gamma_bound);
  return r;
}

}  // namespace

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Hsvp2Hsvp: return "hsvp2hsvp";
    case Mode::Dsp2Dsp: return "dsp2dsp";
    case Mode::Dsp2Hsvp: return "dsp2hsvp";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "hsvp2hsvp") return Mode::Hsvp2Hsvp;
  if (s == "dsp2dsp") return Mode::Dsp2Dsp;
  if (s == "dsp2hsvp") return Mode::Dsp2Hsvp;
  fail(ErrorKind::InvalidParams, "unknown mode '" + s + "'");
}

FormulaId formula_for(Mode m) {
  switch (m) {
    case Mode::Hsvp2Hsvp: return FormulaId::Sec2;
    case Mode::Dsp2Dsp: return FormulaId::Thm4;
    case Mode::Dsp2Hsvp: return FormulaId::Thm5;
  }
  return FormulaId::Sec2;
}

GuaranteeBound theorem_bound(FormulaId id, std::size_t n, std::size_t ell, int tau, std::size_t k) {
  auto bad = [](const std::string& m) { fail(ErrorKind::HypothesisViolated, m); };
  if (tau < 0) bad("tau must be nonnegative");
  GuaranteeBound g;
  g.formula_id = id;
  g.n = n;
  g.ell = ell;
  g.k = k;
  g.tau = tau;
  long double nn = static_cast<long double>(n);
  long double t = static_cast<long double>(tau);
  switch (id) {
    case FormulaId::Sec2: {
      if (k < 2 || n < k) bad("requires n >= k >= 2");
      g.ell = 1;
      long double lead = mul_up((nn - 1) / (2.0L * static_cast<long double>(k - 1)),
                                log2_hermite_upper(static_cast<int>(k)));
      g.log2_gamma_bound = add_up(lead, std::ldexp(nn * nn * nn, -tau));
      break;
    }
    case FormulaId::Thm4: {
      if (k < 10 || n < k) bad("requires n >= k >= 10");
      if (ell < 1 || ell >= n) bad("requires 1 <= l < n");
      long double e = static_cast<long double>(ell * (n - ell));
      g.log2_gamma_bound = add_up(e, mul_up(e * nn * nn, std::exp2(-t / 2.0L)));
      break;
    }
    case FormulaId::Thm5: {
      if (k < 10 || n < k) bad("requires n >= k >= 10");
      if (ell < 1 || ell > n - k + 1) bad("requires 1 <= l <= n-k+1");
      long double e = static_cast<long double>(ell * (n - ell));
      long double lead = mul_up(e / static_cast<long double>(k - 1), log2_hermite_upper(static_cast<int>(k)) / 2.0L);
      g.log2_gamma_bound = add_up(lead, std::ldexp(e * nn * nn, -tau));
      break;
    }
  }
  return g;
}

void validate(const ReductionParams& p, std::size_t n) {
  auto bad = [](const std::string& m) { fail(ErrorKind::InvalidParams, m); };
  if (p.tau < 0) bad("tau must be nonnegative");
  switch (p.mode) {
    case Mode::Hsvp2Hsvp:
      if (p.k < 2) bad("hsvp2hsvp requires k >= 2");
      if (n < p.k) bad("hsvp2hsvp requires n >= k");
      break;
    case Mode::Dsp2Dsp:
      if (p.k < 10 || n < p.k) bad("dsp2dsp requires n >= k >= 10");
      if (p.ell < 1 || p.ell >= n) bad("dsp2dsp requires 1 <= l < n");
      break;
    case Mode::Dsp2Hsvp:
      if (p.k < 10 || n < p.k) bad("dsp2hsvp requires n >= k >= 10");
      if (p.ell < 1 || p.ell > n - p.k + 1) bad("dsp2hsvp requires 1 <= l <= n-k+1");
      break;
  }
}

ReductionResult hsvp_recursive(const Lattice& l, const ReductionParams& p) { return run_mode(l, p, Mode::Hsvp2Hsvp); }
ReductionResult dsp_to_dsp(const Lattice& l, const ReductionParams& p) { return run_mode(l, p, Mode::Dsp2Dsp); }
ReductionResult dsp_to_hsvp(const Lattice& l, const ReductionParams& p) { return run_mode(l, p, Mode::Dsp2Hsvp); }
ReductionResult run_reduction(const Lattice& l, const ReductionParams& p) { return run_mode(l, p, p.mode); }

RunStats simulate_reduction(const ReductionParams& p, std::size_t n) {
  validate(p, n);
  SymbolicBackend be;
  Engine<SymbolicBackend> eng(be, p, n);
  std::size_t out = eng.run(n);
  if (out != expected_rank(p)) fail(ErrorKind::InvariantViolation, "symbolic output has the wrong rank");
  return eng.stats;
}

std::uint64_t hsvp_call_count(std::size_t n, std::size_t k, int tau) {
  if (tau <= 0) return 0;
  if (n == k) return 1;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n - k + static_cast<unsigned long>(tau) - 1, static_cast<unsigned long>(tau) - 1);
  return c.get_ui();
}

}  // namespace latrec
