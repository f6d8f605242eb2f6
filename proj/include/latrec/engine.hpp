#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "latrec/errors.hpp"
#include "latrec/reduce.hpp"

namespace latrec {

enum class Action { Dual, Recurse, Oracle, Lll };

inline const char* action_name(Action a) {
  switch (a) {
    case Action::Dual: return "dual";
    case Action::Recurse: return "recurse";
    case Action::Oracle: return "oracle";
    case Action::Lll: return "lll";
  }
  return "?";
}

// Where a node sits: its parameters and how many duals/intersections led to it.
struct NodeCtx {
  Mode mode = Mode::Hsvp2Hsvp;
  std::size_t n = 0, ell = 0;
  int tau = 0;
  std::size_t duals = 0, inters = 0;
  std::size_t depth = 0;
};

// The three recursions, written once against a backend:
//   Prepared enter(const Lat&, const NodeCtx&)      node entry (e.g. LLL the basis)
//   Sub leave(Sub, const Prepared&)                 coefficients back to the entry basis
//   std::size_t rank(const Lat&)
//   Lat dual(const Lat&, const NodeCtx&)            basis-aligned dual
//   Sub lll_prefix(const Lat&, std::size_t ell)
//   Sub svp(const Lat&)
//   Sub dsp_oracle(const Lat&, std::size_t ell)
//   std::pair<Lat, Sub> intersect(const Lat&, const Sub& dual_sub, const NodeCtx&)
//   Sub complement(const Lat&, const Sub& dual_sub)
//   Sub compose(const Sub& y, const Sub& k)
//   void on_exit(const NodeCtx&, Action, const Lat&, const Sub&)
// Sublattices of the dual are given by coefficients w.r.t. the basis dual() returns.
template <class Backend>
class Engine {
 public:
  using Lat = typename Backend::Lat;
  using Sub = typename Backend::Sub;

  Engine(Backend& be, const ReductionParams& p, std::size_t root_n)
      : be_(be), p_(p), k_(p.k),
        path_bound_(2.0 * p.tau + 20.0 * std::log2(static_cast<double>(root_n))) {}

  RunStats stats;

  Sub run(const Lat& l) {
    NodeCtx ctx{p_.mode, be_.rank(l), p_.ell, p_.tau, 0, 0};
    switch (p_.mode) {
      case Mode::Hsvp2Hsvp: ctx.ell = 1; return hsvp(l, ctx);
      case Mode::Dsp2Dsp: return dsp_dsp(l, ctx, false);
      case Mode::Dsp2Hsvp: return dsp_hsvp(l, ctx, false, potential(ctx.n, ctx.tau), 0);
    }
    return Sub{};
  }

 private:
  struct Frame {
    std::size_t n, ell;
    int tau;
  };

  [[noreturn]] void violation(const std::string& what) {
    std::ostringstream os;
    os << what << " [path:";
    for (const auto& f : path_) os << " (" << f.n << "," << f.ell << "," << f.tau << ")";
    os << "]";
    fail(ErrorKind::InvariantViolation, os.str());
  }

  void push(const NodeCtx& c) {
    path_.push_back({c.n, c.ell, c.tau});
    ++stats.nodes;
    if (path_.size() > stats.depth_reached) stats.depth_reached = path_.size();
  }

  static NodeCtx child(const NodeCtx& c, std::size_t n, std::size_t ell, int tau, bool via_dual) {
    NodeCtx r = c;
    r.n = n;
    r.ell = ell;
    r.tau = tau;
    ++r.depth;
    if (via_dual) ++r.duals; else ++r.inters;
    return r;
  }

  double potential(std::size_t n, int tau) const {
    return tau + 20.0 * std::log2(static_cast<double>(n - k_ + 1));
  }

  Sub hsvp(const Lat& in, const NodeCtx& ctx) {
    std::size_t n = be_.rank(in);
    if (n != ctx.n || n < k_) violation("rank below oracle rank in HSVP recursion");
    push(ctx);
    auto prep = be_.enter(in, ctx);
    const Lat& l = prep.lat;
    Sub out;
    Action act;
    if (ctx.tau == 0) {
      act = Action::Lll;
      ++stats.lll_calls;
      out = be_.lll_prefix(l, 1);
    } else if (n == k_) {
      act = Action::Oracle;
      ++stats.oracle_calls;
      out = be_.svp(l);
    } else {
      act = Action::Recurse;
      NodeCtx rc = child(ctx, n, 1, ctx.tau - 1, true);
      Sub w = hsvp(be_.dual(l, ctx), rc);
      auto [lp, kmat] = be_.intersect(l, w, ctx);
      NodeCtx lc = child(ctx, n - 1, 1, ctx.tau, false);
      Sub y = hsvp(lp, lc);
      out = be_.compose(y, kmat);
    }
    be_.on_exit(ctx, act, l, out);
    path_.pop_back();
    return be_.leave(std::move(out), prep);
  }

  Sub dsp_dsp(const Lat& in, const NodeCtx& ctx, bool from_dual) {
    std::size_t n = be_.rank(in), ell = ctx.ell;
    if (n != ctx.n || n < k_ || ell < 1 || ell >= n) violation("DSP recursion left 1 <= l < n, n >= k");
    push(ctx);
    auto prep = be_.enter(in, ctx);
    const Lat& l = prep.lat;
    Sub out;
    Action act;
    if (2 * ell > n) {
      if (from_dual) violation("two consecutive duality steps");
      act = Action::Dual;
      ++stats.duality_steps;
      NodeCtx dc = child(ctx, n, n - ell, ctx.tau, true);
      Sub z = dsp_dsp(be_.dual(l, ctx), dc, true);
      out = be_.complement(l, z);
    } else if (n == k_) {
      act = Action::Oracle;
      ++stats.oracle_calls;
      out = be_.dsp_oracle(l, ell);
    } else if (ctx.tau == 0) {
      act = Action::Lll;
      ++stats.lll_calls;
      out = be_.lll_prefix(l, ell);
    } else {
      act = Action::Recurse;
      std::size_t ls = (n - k_ + 19) / 20;
      NodeCtx rc = child(ctx, n, ls, ctx.tau - 1, true);
      Sub m = dsp_dsp(be_.dual(l, ctx), rc, false);
      auto [lp, kmat] = be_.intersect(l, m, ctx);
      NodeCtx lc = child(ctx, n - ls, ell, ctx.tau, false);
      Sub y = dsp_dsp(lp, lc, false);
      out = be_.compose(y, kmat);
    }
    be_.on_exit(ctx, act, l, out);
    path_.pop_back();
    return be_.leave(std::move(out), prep);
  }

  static bool duality_condition(std::size_t n, std::size_t ell, std::size_t k) {
    std::size_t m = n - k;
    // max{1, m/5} < l < n/2
    bool low = ell > 1 && 5 * ell > m && 2 * ell < n;
    // l >= n - max{1, m/10}
    bool high = n - ell <= 1 || 10 * (n - ell) <= m;
    return low || high;
  }

  Sub dsp_hsvp(const Lat& in, const NodeCtx& ctx, bool from_dual, double parent_phi, std::size_t recursions) {
    std::size_t n = be_.rank(in), ell = ctx.ell;
    push(ctx);
    if (n != ctx.n || n < k_ || ell < 1 || ell >= n) violation("DSP->HSVP recursion left 1 <= l < n, n >= k");
    if (std::min(ell, n - ell) > n - k_ + 1) violation("min{l, n-l} <= n-k+1 fails");
    double phi = potential(n, ctx.tau);
    if (phi > parent_phi + 1e-9) violation("potential increased");
    if (static_cast<double>(recursions) > path_bound_) violation("path recursion count exceeds 2tau + 20 log2 n");
    if (recursions > stats.max_path_recursions) stats.max_path_recursions = recursions;
    auto prep = be_.enter(in, ctx);
    const Lat& l = prep.lat;
    Sub out;
    Action act;
    if (duality_condition(n, ell, k_)) {
      if (from_dual) violation("two consecutive duality steps");
      act = Action::Dual;
      ++stats.duality_steps;
      NodeCtx dc = child(ctx, n, n - ell, ctx.tau, true);
      Sub z = dsp_hsvp(be_.dual(l, ctx), dc, true, phi, recursions);
      out = be_.complement(l, z);
    } else if (n == k_ && ell == 1) {
      act = Action::Oracle;
      ++stats.oracle_calls;
      out = be_.svp(l);
    } else if (ctx.tau == 0) {
      act = Action::Lll;
      ++stats.lll_calls;
      out = be_.lll_prefix(l, ell);
    } else {
      act = Action::Recurse;
      if (n == k_) violation("recursion step at rank k (an oracle call would need l != 1)");
      std::size_t ls = (n - k_ + 19) / 20;
      int b = 2 * ell < n ? 1 : 0;
      if (b == 1 && 2 * ell >= n - ls) violation("corner case: l < n/2 but l_L >= n_L/2");
      NodeCtx rc = child(ctx, n, ls, ctx.tau - b, true);
      Sub m = dsp_hsvp(be_.dual(l, ctx), rc, false, phi, recursions + 1);
      auto [lp, kmat] = be_.intersect(l, m, ctx);
      NodeCtx lc = child(ctx, n - ls, ell, ctx.tau, false);
      Sub y = dsp_hsvp(lp, lc, false, phi, recursions + 1);
      out = be_.compose(y, kmat);
    }
    be_.on_exit(ctx, act, l, out);
    path_.pop_back();
    return be_.leave(std::move(out), prep);
  }

  Backend& be_;
  const ReductionParams& p_;
  std::size_t k_;
  double path_bound_;
  std::vector<Frame> path_;
};

}  // namespace latrec
