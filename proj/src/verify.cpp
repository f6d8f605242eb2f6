#include "latrec/verify.hpp"

#include <cmath>
#include <functional>

#include "latrec/errors.hpp"
#include "latrec/intmat.hpp"
#include "latrec/lll.hpp"
#include "latrec/reduce.hpp"
#include "latrec/repr.hpp"

namespace latrec {

nlohmann::json PropertyReport::to_json() const {
  nlohmann::json j = {{"suite", suite},       {"property", property}, {"cases", cases},
                      {"failures", failures}, {"status", pass() ? "PASS" : "FAIL"}};
  if (failures > 0) j["counterexample"] = counterexample;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"duality", "composition", "lll", "oracle", "reduce", "planner", "repr"};
  return names;
}

Rational brute_force_min_norm_sq(const Lattice& l) {
  LllBasis r = lll_reduce(l);
  std::size_t n = l.rank();
  RatMatrix g = gram(r.basis);
  RatMatrix d = mul(inverse(g), r.basis);
  Rational b1 = g(0, 0);
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    // |x_i| = |<v, d_i>| <= |v|·|d_i| <= |b_1|·|d_i|
    Rational s = b1 * dot(d.row(i), d.row(i));
    Integer f = floor_q(s), root;
    mpz_sqrt(root.get_mpz_t(), f.get_mpz_t());
    bound[i] = root.get_si();
  }
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  Rational best = b1;
  for (;;) {
    bool zero = true;
    for (long v : x) zero = zero && v == 0;
    if (!zero) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (x[i] != 0 && x[j] != 0) s += g(i, j) * x[i] * x[j];
      if (s < best) best = s;
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) x[i] = -bound[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return best;
}

std::set<long double> TreeEnumerator::direct(std::size_t n, std::size_t ell, std::uint64_t budget) {
  std::set<long double> s = {lll_leaf_log2(n, ell)};
  bool svp = variable_ ? ell == 1 && static_cast<long double>(budget) >= cost_.oracle_time(n)
                       : n == k_ && ell == 1 && budget >= 1;
  if (svp) s.insert(svp_leaf_log2(n));
  std::size_t lo = variable_ ? ell + 1 : std::max(ell + 1, k_);
  std::size_t hi = n > lo ? n - lo : 0;
  for (std::size_t ls = 1; ls <= hi; ++ls)
    for (std::uint64_t cs = 0; cs < budget; ++cs) {
      const auto& right = all(n, ls, cs);
      const auto& left = all(n - ls, ell, budget - cs);
      for (long double r : right)
        for (long double l : left) s.insert(combine_log2(l, r, ell, n - ls));
    }
  return s;
}

const std::set<long double>& TreeEnumerator::all(std::size_t n, std::size_t ell, std::uint64_t budget) {
  auto key = std::make_tuple(n, ell, budget);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::set<long double> s = direct(n, ell, budget);
  if (n - ell != ell) {
    std::set<long double> d = direct(n, n - ell, budget);
    s.insert(d.begin(), d.end());
  }
  return memo_.emplace(key, std::move(s)).first->second;
}

Lattice skewed_lattice(std::size_t n, unsigned max_step, Rng& rng) {
  Lattice l = random_lattice(n, 3, LatticeKind::UniformInteger, rng);
  long shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) shift += uniform_between(rng, 0, max_step);
    Rational f(Integer(1) << static_cast<mp_bitcnt_t>(shift));
    for (auto& x : l.basis.row(i)) x *= f;
  }
  return l;
}

Lattice descending_lattice(std::size_t n, unsigned top_bits, Rng& rng) {
  std::vector<Integer> diag(n);
  diag[0] = Integer(1) << top_bits;
  for (std::size_t i = 1; i < n; ++i) {
    diag[i] = diag[i - 1] * uniform_between(rng, 72, 90) / 100;
    diag[i] += diag[i] % 2;
  }
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = diag[i];
    if (i > 0) b(i, i - 1) = Rational(diag[i - 1] / 2);
    for (std::size_t j = 0; j + 1 < i; ++j) {
      Integer h = diag[j] / 2;
      b(i, j) = Rational(uniform_below(rng, 2 * h + 1) - h);
    }
  }
  return Lattice(std::move(b));
}

namespace {

class Prop {
 public:
  Prop(std::string suite, std::string name) { r_.suite = std::move(suite), r_.property = std::move(name); }

  void check(const std::function<bool()>& body, const std::function<nlohmann::json()>& dump) {
    ++r_.cases;
    std::string err;
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (ok) return;
    if (r_.failures == 0) {
      r_.counterexample = dump();
      if (!err.empty()) r_.counterexample["error"] = err;
    }
    ++r_.failures;
  }

  PropertyReport report() const { return r_; }

 private:
  PropertyReport r_;
};

std::vector<std::size_t> sizes_or(const VerifyOptions& o, std::vector<std::size_t> def) {
  return o.sizes.empty() ? def : o.sizes;
}

std::size_t cases_or(const VerifyOptions& o, std::size_t def) { return o.cases ? o.cases : def; }

std::size_t pick(Rng& rng, const std::vector<std::size_t>& v) {
  return v[static_cast<std::size_t>(uniform_between(rng, 0, static_cast<long>(v.size()) - 1))];
}

nlohmann::json dump_sub(const Sublattice& s) { return {{"lattice", to_json(s.parent)}, {"coeffs", to_json(s.coeffs)}}; }

// gamma(a)^2 == gamma(b)^2 for ratios over lattices of equal rank n.
bool same_gamma(const DensityRatio& a, const DensityRatio& b) {
  return pow_q(a.det_sq_sub, a.n) * pow_q(b.det_sq_parent, b.ell) ==
         pow_q(b.det_sq_sub, b.n) * pow_q(a.det_sq_parent, a.ell);
}

std::vector<PropertyReport> suite_duality(const VerifyOptions& o) {
  Rng rng(o.seed);
  auto sizes = sizes_or(o, {2, 3, 4, 5, 6});
  Prop inv("duality", "involution"), gam("duality", "gamma_preservation"), det("duality", "determinant_identity"),
      dd("duality", "double_dual"), pi("duality", "project_intersect_duality");
  for (std::size_t c = 0, total = cases_or(o, 200); c < total; ++c) {
    std::size_t n = std::max<std::size_t>(2, pick(rng, sizes));
    std::size_t ell = static_cast<std::size_t>(uniform_between(rng, 1, static_cast<long>(n) - 1));
    Lattice l = random_lattice(n, 3, LatticeKind::UniformInteger, rng);
    Sublattice lp = random_primitive_sublattice(l, ell, rng);
    Lattice d = dual(l);
    Sublattice lp_as_dual_of_d{Lattice::unchecked(l.basis), lp.coeffs};
    auto dump = [&] { return dump_sub(lp); };
    Sublattice m;
    bool built = false;
    try {
      m = intersect_orthogonal_sub(d, lp_as_dual_of_d);
      built = true;
    } catch (const std::exception&) {
    }
    inv.check([&] {
      if (!built) return false;
      Sublattice back = intersect_orthogonal_sub(l, Sublattice{d, m.coeffs});
      return same_lattice(back.lattice(), lp.lattice());
    }, dump);
    gam.check([&] { return built && same_gamma(density_ratio(lp), density_ratio(m)); }, dump);
    det.check([&] { return built && m.lattice().det_sq() == d.det_sq() * lp.lattice().det_sq(); }, dump);
    dd.check([&] { return dual(d).basis == l.basis && same_lattice(dual(d), l); }, dump);
    Sublattice w = random_primitive_sublattice(d, ell, rng);
    pi.check([&] { return same_lattice(dual(intersect_orthogonal(l, w)), project_orthogonal(d, w)); },
             [&] { return dump_sub(w); });
  }
  return {inv.report(), gam.report(), det.report(), dd.report(), pi.report()};
}

std::vector<PropertyReport> suite_composition(const VerifyOptions& o) {
  Rng rng(o.seed);
  auto sizes = sizes_or(o, {2, 3, 4, 5, 6});
  Prop comp("composition", "composition_identity");
  for (std::size_t c = 0, total = cases_or(o, 200); c < total; ++c) {
    std::size_t n = std::max<std::size_t>(2, pick(rng, sizes));
    std::size_t m = static_cast<std::size_t>(uniform_between(rng, 1, static_cast<long>(n)));
    std::size_t ell = static_cast<std::size_t>(uniform_between(rng, 1, static_cast<long>(m)));
    Lattice l = random_lattice(n, 3, LatticeKind::UniformInteger, rng);
    Sublattice mid = random_primitive_sublattice(l, m, rng);
    Sublattice inner = random_primitive_sublattice(mid.lattice(), ell, rng);
    comp.check([&] {
      DensityRatio outer = density_ratio(Sublattice{l, mul(inner.coeffs, mid.coeffs)});
      DensityRatio r2 = density_ratio(inner);
      DensityRatio r1 = density_ratio(mid);
      // gamma(L,L'')^(2mn) = gamma(L',L'')^(2mn) · gamma(L,L')^(2 ell n)
      Rational lhs = pow_q(outer.det_sq_sub, m * n) / pow_q(outer.det_sq_parent, ell * m);
      Rational rhs = pow_q(r2.det_sq_sub, m * n) / pow_q(r2.det_sq_parent, ell * n) *
                     (pow_q(r1.det_sq_sub, ell * n) / pow_q(r1.det_sq_parent, ell * m));
      return lhs == rhs;
    }, [&] { return nlohmann::json{{"outer", dump_sub(mid)}, {"inner", to_json(inner.coeffs)}}; });
  }
  return {comp.report()};
}

std::vector<PropertyReport> suite_lll(const VerifyOptions& o) {
  Rng rng(o.seed);
  auto sizes = sizes_or(o, {2, 3, 4, 5, 6, 7, 8, 9, 10});
  Prop red("lll", "reduced"), same("lll", "same_lattice"), defect("lll", "orthogonality_defect"),
      decay("lll", "gs_decay"), first("lll", "first_vector"), bits("lll", "bitlength_bound"),
      entry("lll", "entry_bound"), idem("lll", "idempotent");
  for (std::size_t c = 0, total = cases_or(o, 100); c < total; ++c) {
    std::size_t n = pick(rng, sizes);
    unsigned b = static_cast<unsigned>(uniform_between(rng, 1, 16));
    Lattice l = c % 2 ? random_lattice(n, b, LatticeKind::UniformInteger, rng) : skewed_lattice(n, 8, rng);
    LllBasis r = lll_reduce(l);
    Rational det = l.det_sq();
    auto dump = [&] { return to_json(l); };
    red.check([&] { return is_lll_reduced(r.gso) && is_lll_reduced(gso(r.basis)); }, dump);
    same.check([&] { return same_lattice(Lattice::unchecked(r.basis), l) && mul(r.transform, l.basis) == r.basis; }, dump);
    defect.check([&] {
      Rational p = 1;
      for (std::size_t i = 0; i < n; ++i) p *= dot(r.basis.row(i), r.basis.row(i));
      Rational two_n2 = Rational(Integer(1) << static_cast<mp_bitcnt_t>(n * n));
      return p * p <= two_n2 * det * det;
    }, dump);
    decay.check([&] {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          if (r.gso.gs_norms_sq[i] > Rational(Integer(1) << static_cast<mp_bitcnt_t>(j - i)) * r.gso.gs_norms_sq[j])
            return false;
      return true;
    }, dump);
    first.check([&] {
      Rational b1 = dot(r.basis.row(0), r.basis.row(0));
      return pow_q(b1, n) <= Rational(Integer(1) << static_cast<mp_bitcnt_t>(n * (n - 1) / 2)) * det;
    }, dump);
    bits.check([&] { return bitlength(r.basis) <= lll_bitlength_bound(n, bitlength(l.basis)); }, dump);
    entry.check([&] { return lll_entry_bound_holds(r); }, dump);
    idem.check([&] { return lll_reduce_basis(r.basis).basis == r.basis; }, dump);
  }
  return {red.report(), same.report(), defect.report(), decay.report(), first.report(),
          bits.report(), entry.report(), idem.report()};
}

std::vector<PropertyReport> suite_oracle(const VerifyOptions& o) {
  Rng rng(o.seed);
  auto sizes = sizes_or(o, {1, 2, 3, 4});
  Prop brute("oracle", "brute_force_equivalence"), herm("oracle", "hermite_inequality"),
      table("oracle", "hermite_table");
  for (std::size_t c = 0, total = cases_or(o, 200); c < total; ++c) {
    std::size_t n = pick(rng, sizes);
    Lattice l = random_lattice(n, static_cast<unsigned>(uniform_between(rng, 1, 3)), LatticeKind::UniformInteger, rng);
    brute.check([&] {
      SvpResult s = svp_exact(l);
      RatMatrix v = mul(IntMatrix(1, n, s.vector), l.basis);
      return s.norm_sq == brute_force_min_norm_sq(l) && dot(v.row(0), v.row(0)) == s.norm_sq;
    }, [&] { return to_json(l); });
  }
  std::size_t per_k = o.cases ? o.cases : 1000;
  for (int k = 2; k <= 8; ++k) {
    Rational dk = *hermite_power_exact(k);
    for (std::size_t c = 0; c < per_k; ++c) {
      Lattice l = c % 4 == 3 ? random_lattice(k, 6, LatticeKind::QaryLike, rng)
                             : random_lattice(k, static_cast<unsigned>(uniform_between(rng, 1, 6)),
                                              LatticeKind::UniformInteger, rng);
      herm.check([&] { return pow_q(svp_exact(l).norm_sq, k) <= dk * l.det_sq(); }, [&] { return to_json(l); });
    }
  }
  for (int k = 1; k <= 60; ++k) {
    table.check([&] {
      HermiteBound h = hermite_bound(k);
      bool finite = std::isfinite(h.log2_delta_k) && (k == 1 || h.log2_delta_k > 0);
      bool source = (k <= 8) == (h.source == HermiteBound::Source::ExactTable);
      bool below = k > 8 || k == 1 || log2_hermite_upper(k) <= log2_blichfeldt_upper(k);
      bool exact = k > 8 || std::fabs(std::log2(static_cast<double>(hermite_power_exact(k)->get_d())) / k -
                                      h.log2_delta_k) < 1e-12;
      return finite && source && below && exact;
    }, [&] { return nlohmann::json{{"k", k}}; });
  }
  return {brute.report(), herm.report(), table.report()};
}

std::vector<PropertyReport> suite_reduce(const VerifyOptions& o) {
  Rng rng(o.seed);
  auto sizes = sizes_or(o, {10, 12, 14, 16});
  const std::uint64_t node_cap = 2000;
  Prop hb("reduce", "hsvp_bound"), hc("reduce", "hsvp_call_count"), t4("reduce", "thm4_bound"),
      t5("reduce", "thm5_bound"), mem("reduce", "membership_rank_primitive"),
      grid("reduce", "call_count_grid");
  auto member = [](const Lattice& l, const ReductionResult& r, std::size_t ell) {
    return r.output.rank() == ell && is_primitive(r.output) && contains(l, r.output.basis());
  };
  for (std::size_t c = 0, total = cases_or(o, 10); c < total; ++c) {
    std::size_t n = pick(rng, sizes);
    Lattice l = random_lattice(n, 4, LatticeKind::UniformInteger, rng);
    ReductionParams p;
    p.k = static_cast<std::size_t>(uniform_between(rng, 4, static_cast<long>(std::min<std::size_t>(8, n))));
    p.tau = static_cast<int>(uniform_between(rng, 2, 6));
    while (p.tau > 1 && simulate_reduction(p, n).nodes > node_cap) --p.tau;
    auto dump = [&] { return nlohmann::json{{"lattice", to_json(l)}, {"k", p.k}, {"tau", p.tau}, {"ell", p.ell}}; };
    ReductionResult r;
    hb.check([&] { r = hsvp_recursive(l, p); return r.bound_ok; }, dump);
    hc.check([&] { return r.stats.oracle_calls == hsvp_call_count(n, p.k, p.tau); }, dump);
    mem.check([&] { return member(l, r, 1); }, dump);
    if (n < 10) continue;
    for (Mode m : {Mode::Dsp2Dsp, Mode::Dsp2Hsvp}) {
      ReductionParams q;
      q.mode = m;
      q.k = 10;
      std::size_t choices[] = {1, 2, n - q.k + 1};
      q.ell = choices[uniform_between(rng, 0, 2)];
      if (q.ell >= n) q.ell = 1;
      q.tau = static_cast<int>(uniform_between(rng, 2, 8));
      while (q.tau > 0 && simulate_reduction(q, n).nodes > node_cap) --q.tau;
      auto dq = [&] { return nlohmann::json{{"lattice", to_json(l)}, {"mode", mode_name(m)}, {"ell", q.ell}, {"tau", q.tau}}; };
      ReductionResult rr;
      (m == Mode::Dsp2Dsp ? t4 : t5).check([&] { rr = run_reduction(l, q); return rr.bound_ok; }, dq);
      mem.check([&] { return member(l, rr, q.ell); }, dq);
    }
  }
  for (std::size_t n = 3; n <= 20; ++n)
    for (std::size_t k = 2; k < n; ++k)
      for (int tau = 1; tau <= 6; ++tau) {
        ReductionParams p;
        p.k = k;
        p.tau = tau;
        grid.check([&] { return simulate_reduction(p, n).oracle_calls == hsvp_call_count(n, k, tau); },
                   [&] { return nlohmann::json{{"n", n}, {"k", k}, {"tau", tau}}; });
      }
  return {hb.report(), hc.report(), t4.report(), t5.report(), mem.report(), grid.report()};
}

std::vector<PropertyReport> suite_planner(const VerifyOptions& o) {
  Prop bf("planner", "brute_force_fixed"), bv("planner", "brute_force_variable"), mono("planner", "monotone_in_budget"),
      sym("planner", "duality_symmetry"), refine("planner", "refinement"), reeval("planner", "plan_reevaluation"),
      json("planner", "plan_json_roundtrip");
  {
    GammaTable g = build_table_fixed_k(6, 2, full_budgets(5));
    TreeEnumerator e(false, 2);
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::size_t ell = 1; ell < n; ++ell)
        for (std::size_t c = 0; c <= 5; ++c)
          bf.check([&] { return g.value(n, ell, c) == e.best(n, ell, c); },
                   [&] { return nlohmann::json{{"n", n}, {"ell", ell}, {"budget", c}}; });
  }
  {
    GammaTable g = build_table_variable_k(4, full_budgets(24));
    TreeEnumerator e(true, 0);
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t ell = 1; ell < n; ++ell)
        for (std::size_t c = 0; c <= 24; ++c)
          bv.check([&] { return g.value(n, ell, c) == e.best(n, ell, c); },
                   [&] { return nlohmann::json{{"n", n}, {"ell", ell}, {"budget", c}}; });
  }
  std::size_t nm = o.sizes.empty() ? 30 : o.sizes.back();
  GammaTable g = build_table_fixed_k(nm, 10, coarse_budgets(8, std::pow(8.0L, 5)));
  for (std::size_t n = g.n_min(); n <= nm; ++n)
    for (std::size_t ell = 1; ell < n; ++ell) {
      auto where = [&] { return nlohmann::json{{"n", n}, {"ell", ell}}; };
      mono.check([&] {
        for (std::size_t t = 1; t < g.budgets.size(); ++t)
          if (g.value(n, ell, t) > g.value(n, ell, t - 1)) return false;
        return true;
      }, where);
      sym.check([&] {
        for (std::size_t t = 0; t < g.budgets.size(); ++t)
          if (g.value(n, ell, t) != g.value(n, n - ell, t)) return false;
        return true;
      }, where);
      reeval.check([&] {
        std::size_t t = g.budgets.size() - 1;
        PlanNode p = extract_plan(g, n, ell, t);
        return evaluate_plan(p) == g.value(n, ell, t) && plan_cost(p, false) <= g.budgets.values[t];
      }, where);
      if (n == nm)
        json.check([&] {
          PlanNode p = extract_plan(g, n, ell, g.budgets.size() - 1);
          return to_json(plan_from_json(to_json(p))) == to_json(p) && evaluate_plan(plan_from_json(to_json(p))) == evaluate_plan(p);
        }, where);
    }
  {
    GammaTable full = build_table_fixed_k(9, 3, full_budgets(64));
    for (unsigned b : {2u, 4u, 8u}) {
      GammaTable coarse = build_table_fixed_k(9, 3, coarse_budgets(b, 64));
      for (std::size_t n = 3; n <= 9; ++n)
        for (std::size_t ell = 1; ell < n; ++ell)
          refine.check([&] {
            for (std::size_t t = 0; t < coarse.budgets.size(); ++t) {
              std::size_t c = static_cast<std::size_t>(coarse.budgets.values[t]);
              if (full.value(n, ell, c) > coarse.value(n, ell, t)) return false;
            }
            return true;
          }, [&] { return nlohmann::json{{"base", b}, {"n", n}, {"ell", ell}}; });
    }
  }
  return {bf.report(), bv.report(), mono.report(), sym.report(), refine.report(), reeval.report(), json.report()};
}

std::vector<PropertyReport> suite_repr(const VerifyOptions& o) {
  Rng rng(o.seed);
  auto sizes = sizes_or(o, {2, 3, 4, 5, 6, 7, 8});
  Prop resc("repr", "rescale_lll_and_sandwich"), gsn("repr", "rescale_gram_schmidt"), bits("repr", "lll_bitlength"),
      rb_bits("repr", "rounded_bitlength"), lift("repr", "lifted_gamma"), lower("repr", "rounded_lower_bound"),
      literal("repr", "literal_constants"), beta("repr", "beta_monitoring");
  for (std::size_t c = 0, total = cases_or(o, 200); c < total; ++c) {
    std::size_t n = pick(rng, sizes);
    Lattice l = skewed_lattice(n, 12, rng);
    LllBasis b = lll_reduce(l);
    Rational gamma(4);
    RescaleMap map = rescale_map(b, gamma);
    LllBasis b2 = apply_rescale(b, map);
    auto dump = [&] { return to_json(l); };
    resc.check([&] {
      bool mono = map.alphas[0] == 1;
      for (std::size_t i = 1; i < n; ++i) mono = mono && map.alphas[i - 1] <= map.alphas[i];
      return mono && is_lll_reduced(b2.gso) && rescale_sandwich_holds(b2, gamma) && rescale_gap_holds(b2, map);
    }, dump);
    gsn.check([&] {
      for (std::size_t i = 0; i < n; ++i) {
        Rational a(map.alphas[i]);
        if (b2.gso.gs_norms_sq[i] != b.gso.gs_norms_sq[i] / (a * a)) return false;
      }
      return b2.gso.mu == b.gso.mu;
    }, dump);
    if (c < cases_or(o, 100)) {
      Lattice u = random_lattice(n, static_cast<unsigned>(uniform_between(rng, 1, 20)), LatticeKind::UniformInteger, rng);
      bits.check([&] { return bitlength(lll_reduce(u).basis) <= lll_bitlength_bound(n, bitlength(u.basis)); },
                 [&] { return to_json(u); });
    }
  }
  for (std::size_t c = 0, total = cases_or(o, 60); c < total; ++c) {
    std::size_t n = pick(rng, sizes);
    std::size_t ell = static_cast<std::size_t>(uniform_between(rng, 1, static_cast<long>(std::max<std::size_t>(1, n - 1))));
    Lattice l = c % 3 == 0   ? skewed_lattice(n, 6, rng)
                : c % 3 == 1 ? random_lattice(n, 10, LatticeKind::UniformInteger, rng)
                             : descending_lattice(n, 40, rng);
    RoundingParams rp;
    std::size_t m_prime = n * n * (n * (1 + rp.c2) + 4 + 80);
    auto dump = [&] { return nlohmann::json{{"lattice", to_json(l)}, {"ell", ell}, {"m_prime", m_prime}}; };
    RoundedBasis rb;
    bool ok = true;
    try {
      rb = round_basis(l.basis, ell, m_prime, rp);
    } catch (const std::exception&) {
      ok = false;
    }
    rb_bits.check([&] { return ok && bitlength(rb.b_prime) <= m_prime; }, dump);
    lift.check([&] {
      if (!ok) return false;
      IntMatrix z = lll_reduce(Lattice::unchecked(rb.b_prime)).transform.slice_rows(0, ell);
      return lifted_gamma_ok(rb, z);
    }, dump);
    if (ok && rb.corner_case) continue;
    lower.check([&] {
      if (!ok) return false;
      for (int s = 0; s < 20; ++s) {
        IntVector z(n);
        bool nonzero = false;
        for (auto& x : z) x = uniform_between(rng, -5, 5), nonzero = nonzero || x != 0;
        if (nonzero && !rounded_lower_bound_holds(rb, z)) return false;
      }
      return true;
    }, dump);
  }
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t ell = 1; ell <= n; ++ell) {
      Lattice l = random_lattice(n, 6, LatticeKind::UniformInteger, rng);
      std::size_t m_prime = 10 * n * n * n * n * n;
      literal.check([&] {
        RoundingParams rp;
        rp.profile = ConstantsProfile::Literal;
        RoundedBasis rb = round_basis(l.basis, ell, m_prime, rp);
        for (const auto& x : rb.b_prime.entries())
          if (bitlength(x) > m_prime) return false;
        IntMatrix z = lll_reduce(Lattice::unchecked(rb.b_prime)).transform.slice_rows(0, ell);
        return lifted_gamma_ok(rb, z);
      }, [&] { return nlohmann::json{{"lattice", to_json(l)}, {"ell", ell}}; });
    }
  for (std::size_t c = 0, total = std::max<std::size_t>(1, cases_or(o, 4)); c < total; ++c) {
    std::size_t n = 12 + c % 3;
    Lattice l = random_lattice(n, 4, LatticeKind::UniformInteger, rng);
    ReductionParams p;
    p.mode = Mode::Dsp2Hsvp;
    p.k = 10;
    p.ell = c % 2 ? 1 : n - 9;
    p.tau = 2;
    p.monitor_beta = true;
    beta.check([&] { return dsp_to_hsvp(l, p).stats.beta_checks > 0; },
               [&] { return nlohmann::json{{"lattice", to_json(l)}, {"ell", p.ell}}; });
  }
  return {resc.report(), gsn.report(), bits.report(), rb_bits.report(), lift.report(),
          lower.report(), literal.report(), beta.report()};
}

}  // namespace

std::vector<PropertyReport> run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "duality") return suite_duality(opt);
  if (suite == "composition") return suite_composition(opt);
  if (suite == "lll") return suite_lll(opt);
  if (suite == "oracle") return suite_oracle(opt);
  if (suite == "reduce") return suite_reduce(opt);
  if (suite == "planner") return suite_planner(opt);
  if (suite == "repr") return suite_repr(opt);
  fail(ErrorKind::InvalidParams, "unknown suite '" + suite + "'");
}

}  // namespace latrec
