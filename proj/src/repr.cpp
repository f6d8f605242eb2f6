#include "latrec/repr.hpp"

#include <algorithm>
#include <cmath>

#include "latrec/errors.hpp"

namespace latrec {

namespace {

// Least integer t >= 0 with t^2 >= x, for x >= 0.
Integer ceil_sqrt(const Rational& x) {
  Integer c = ceil_q(x);
  Integer t;
  mpz_sqrt(t.get_mpz_t(), c.get_mpz_t());
  while (Rational(t * t) < x) ++t;
  while (t > 0 && Rational((t - 1) * (t - 1)) >= x) --t;
  return t;
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

Rational gap_gamma(std::size_t n, const RoundingParams& p) {
  if (p.profile == ConstantsProfile::Literal) {
    Integer g;
    mpz_ui_pow_ui(g.get_mpz_t(), n, 2 * n * n * n);
    return Rational(g);
  }
  return pow2(static_cast<long>(p.c2));
}

// Gram-Schmidt vectors from a basis and its mu.
RatMatrix gs_vectors(const RatMatrix& b, const GsoData& g) {
  RatMatrix t = b;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Rational& m = g.mu(i, j);
      if (sgn(m) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) t(i, c) -= m * t(j, c);
    }
  return t;
}

}  // namespace

SizeProfile size_profile(const Lattice& l) {
  SizeProfile s;
  s.q = denominator_lcm(l.basis);
  double n = static_cast<double>(l.rank());
  s.log2_delta = log2_q(l.det_sq()) / (2.0 * n);
  s.log2_delta = std::nextafter(s.log2_delta + std::fabs(s.log2_delta) * 0x1p-48, HUGE_VAL);
  s.log2_beta = std::max(s.log2_delta, log2_q(Rational(s.q)));
  return s;
}

bool beta_step_bounds(const SizeProfile& before, StepOp op, const SizeProfile& after, std::size_t n) {
  double nn = static_cast<double>(n);
  auto tol = [](double x) { return std::fabs(x) * 1e-9 + 1e-9; };
  if (op == StepOp::Intersect) {
    if (!mpz_divisible_p(before.q.get_mpz_t(), after.q.get_mpz_t())) return false;
    double rhs = before.log2_beta + nn * nn / 2.0;
    return after.log2_beta <= rhs + tol(rhs);
  }
  double rhs = 4.0 * nn * before.log2_beta;
  if (after.log2_beta > rhs + tol(rhs)) return false;
  double qrhs = 2.0 * nn * (log2_q(Rational(before.q)) + before.log2_delta);
  return log2_q(Rational(after.q)) <= qrhs + tol(qrhs);
}

bool beta_path_bound(double beta, double b0, std::size_t n, std::size_t duals, std::size_t inters) {
  long double nn = static_cast<long double>(n);
  long double rhs = std::pow(4.0L * nn, static_cast<long double>(duals)) *
                    (static_cast<long double>(b0) + static_cast<long double>(inters) * nn * nn / 2.0L);
  return static_cast<long double>(beta) <= rhs + std::fabs(rhs) * 1e-9L + 1e-9L;
}

std::size_t lll_bitlength_bound(std::size_t n, std::size_t m) { return 4 * n * n * n * m + 4 * n * n * n * n; }

bool lll_entry_bound_holds(const LllBasis& b) {
  std::size_t n = b.basis.rows();
  Integer q = denominator_lcm(b.basis);
  Rational det_sq = 1;
  for (const auto& g : b.gso.gs_norms_sq) det_sq *= g;
  // q^4·|b_j|^4 <= q^(4n)·2^(n^2)·det^4
  Rational rhs = pow_q(Rational(q), 4 * n) * pow2(static_cast<long>(n * n)) * det_sq * det_sq;
  Rational q4 = pow_q(Rational(q), 4);
  for (std::size_t j = 0; j < n; ++j) {
    Rational nsq = dot(b.basis.row(j), b.basis.row(j));
    if (q4 * nsq * nsq > rhs) return false;
  }
  return true;
}

RescaleMap rescale_map(const LllBasis& b, const Rational& gamma) {
  std::size_t n = b.basis.rows();
  RescaleMap m;
  m.gamma = gamma;
  m.alphas.resize(n);
  if (n == 0) return m;
  Rational b1 = dot(b.basis.row(0), b.basis.row(0));
  Rational gpow = 1;
  Integer prev = 1;
  for (std::size_t i = 0; i < n; ++i) {
    gpow *= gamma * gamma;
    Integer t = ceil_sqrt(b.gso.gs_norms_sq[i] / (gpow * b1));
    if (i == 0) t = 1;
    prev = std::max(prev, t);
    m.alphas[i] = prev;
  }
  return m;
}

LllBasis apply_rescale(const LllBasis& b, const RescaleMap& map) {
  std::size_t n = b.basis.rows(), d = b.basis.cols();
  RatMatrix t = gs_vectors(b.basis, b.gso);
  for (std::size_t i = 0; i < n; ++i) {
    Rational inv(1, map.alphas[i]);
    inv.canonicalize();
    for (std::size_t c = 0; c < d; ++c) t(i, c) *= inv;
  }
  LllBasis out;
  out.basis = t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Rational& m = b.gso.mu(i, j);
      if (sgn(m) == 0) continue;
      for (std::size_t c = 0; c < d; ++c) out.basis(i, c) += m * t(j, c);
    }
  out.gso = gso(out.basis);
  out.transform = IntMatrix::identity(n);
  return out;
}

bool rescale_sandwich_holds(const LllBasis& b, const Rational& gamma) {
  std::size_t n = b.basis.rows();
  if (n == 0) return true;
  Rational b1 = dot(b.basis.row(0), b.basis.row(0));
  Rational lower = b1 / pow2(static_cast<long>(2 * n));
  Rational step = 4 * gamma * gamma, upper = b1;
  for (std::size_t i = 0; i < n; ++i) {
    upper *= step;
    const Rational& gs = b.gso.gs_norms_sq[i];
    Rational full = dot(b.basis.row(i), b.basis.row(i));
    if (lower > gs || gs > full || full > upper) return false;
  }
  return true;
}

bool rescale_gap_holds(const LllBasis& b, const RescaleMap& map) {
  Rational f = map.gamma * map.gamma / 4;
  for (std::size_t i = 0; i + 1 < map.alphas.size(); ++i)
    if (map.alphas[i] < map.alphas[i + 1] && !(b.gso.gs_norms_sq[i + 1] > f * b.gso.gs_norms_sq[i])) return false;
  return true;
}

RoundingPlan rounding_plan(std::size_t n, std::size_t d, std::size_t m_prime, const RoundingParams& p) {
  RoundingPlan r;
  if (n == 0 || d == 0) fail(ErrorKind::InvalidParams, "empty basis");
  if (p.profile == ConstantsProfile::Literal) {
    if (n > 3) fail(ErrorKind::InvalidParams, "literal constants are only supported for n <= 3");
    std::size_t n5 = n * n * n * n * n;
    if (m_prime < 10 * n5) fail(ErrorKind::SizeTooSmall, "m' must be at least 10n^5");
    r.entry_bits = m_prime;
    r.log2_m = m_prime - 2 * n5;
    r.gap_bits = static_cast<std::size_t>(std::ceil(2.0 * n * n * n * std::log2(static_cast<double>(n))));
    return r;
  }
  if (p.c2 < 1) fail(ErrorKind::InvalidParams, "rescale gap needs c2 >= 1");
  r.entry_bits = m_prime / (n * d);
  r.gap_bits = p.c2;
  // Entries of B^(2) are at most (2·gamma_r)^n·M; 4 more bits for the encoding of
  // numerator (with sign), the +1 in the bit count and the denominator 1.
  std::size_t headroom = std::max<std::size_t>(p.c1, n * (1 + p.c2) + 4);
  if (r.entry_bits < headroom + 2 * n) fail(ErrorKind::SizeTooSmall, "m' leaves fewer than 2n bits for M");
  r.log2_m = r.entry_bits - headroom;
  return r;
}

RoundedBasis round_basis(const RatMatrix& b, std::size_t ell, std::size_t m_prime, const RoundingParams& p) {
  std::size_t n = b.rows(), d = b.cols();
  if (ell < 1 || ell > n) fail(ErrorKind::InvalidRank, "ell must lie in [1, n]");
  RoundingPlan plan = rounding_plan(n, d, m_prime, p);
  RoundedBasis rb;
  rb.original = b;
  rb.m_prime = m_prime;
  rb.ell = ell;
  rb.profile = p.profile;
  mpz_ui_pow_ui(rb.scale_m.get_mpz_t(), 2, plan.log2_m);
  LllBasis b1 = lll_reduce_basis(b);
  rb.transform = b1.transform;

  Rational det_sub = 1, det_all = 1;
  for (std::size_t i = 0; i < n; ++i) {
    det_all *= b1.gso.gs_norms_sq[i];
    if (i < ell) det_sub *= b1.gso.gs_norms_sq[i];
  }
  DensityRatio head{det_sub, det_all, ell, n};
  if (head.within(Rational(1))) {
    rb.corner_case = true;
    rb.b_prime = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) rb.b_prime(i, i) = i < ell ? Rational(1) : Rational(rb.scale_m);
    return rb;
  }

  LllBasis b2 = apply_rescale(b1, rescale_map(b1, gap_gamma(n, p)));
  // R >= |b_1|/M as a dyadic rational with 64 bits beyond the integer part.
  Rational x = dot(b1.basis.row(0), b1.basis.row(0)) / (Rational(rb.scale_m) * Rational(rb.scale_m));
  long shift = 64 + std::max<long>(0, static_cast<long>(-std::floor(log2_q(x) / 2.0)));
  Rational r = Rational(ceil_sqrt(x * pow2(2 * shift))) * pow2(-shift);
  Rational inv = 1 / r;
  rb.b_prime = RatMatrix(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) rb.b_prime(i, c) = Rational(trunc_q(b2.basis(i, c) * inv));
  if (matrix_rank(rb.b_prime) != n) fail(ErrorKind::SizeTooSmall, "rounded basis is singular; increase m'");
  return rb;
}

Sublattice lift_solution(const RoundedBasis& rb, const IntMatrix& z) {
  std::size_t n = rb.original.rows();
  if (z.cols() != n) fail(ErrorKind::RankMismatch, "coefficient matrix has the wrong width");
  if (matrix_rank(to_rational(z)) != z.rows()) fail(ErrorKind::RankMismatch, "coefficient rows are dependent");
  return Sublattice{Lattice::unchecked(rb.original), mul(z, rb.transform)};
}

bool lifted_gamma_ok(const RoundedBasis& rb, const IntMatrix& z) {
  std::size_t n = rb.original.rows();
  DensityRatio lifted = density_ratio(lift_solution(rb, z));
  if (lifted.within(Rational(1))) return true;
  DensityRatio rounded = density_ratio(Lattice::unchecked(rb.b_prime), mul(z, rb.b_prime));
  Rational eps;
  if (rb.profile == ConstantsProfile::Literal) {
    long e = 3 * static_cast<long>(n * n * n * n * n) - static_cast<long>(rb.m_prime);
    eps = pow2(e);
  } else {
    eps = pow2(-20);
  }
  Rational f = pow_q(1 + eps, 2 * n);
  std::size_t ell = lifted.ell;
  return pow_q(lifted.det_sq_sub, n) * pow_q(rounded.det_sq_parent, ell) <=
         f * pow_q(rounded.det_sq_sub, n) * pow_q(lifted.det_sq_parent, ell);
}

bool rounded_lower_bound_holds(const RoundedBasis& rb, const IntVector& z) {
  std::size_t n = rb.b_prime.rows(), d = rb.b_prime.cols();
  Rational nz = 0;
  for (const auto& x : z) nz += Rational(x * x);
  Rational v2 = 0;
  for (std::size_t c = 0; c < d; ++c) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += Rational(z[i]) * rb.b_prime(i, c);
    v2 += s * s;
  }
  Rational m = Rational(rb.scale_m);
  return v2 * pow_q(Rational(9), n) >= m * m * nz;
}

}  // namespace latrec
