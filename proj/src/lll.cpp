#include "latrec/lll.hpp"

#include "latrec/errors.hpp"

namespace latrec {

namespace {

// Cohen's integral LLL (Algorithm 2.6.7) driven by the Gram matrix, 1-indexed.
class GramLll {
 public:
  explicit GramLll(IntMatrix g) : n_(g.rows()), g_(std::move(g)), u_(IntMatrix::identity(n_)),
                                  d_(n_ + 1), lam_(n_ + 1, n_ + 1) {}

  IntegralLll run() {
    d_[0] = 1;
    if (n_ > 0) {
      d_[1] = G(1, 1);
      if (sgn(d_[1]) <= 0) fail(ErrorKind::DegenerateBasis, "zero vector in basis");
    }
    std::size_t k = 2, kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        extend(k);
      }
      reduce(k, k - 1);
      if (lovasz_fails(k)) {
        swap(k, kmax);
        k = k > 2 ? k - 1 : 2;
      } else {
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
      }
    }
    IntegralLll out;
    out.transform = std::move(u_);
    out.d = std::move(d_);
    out.lambda = IntMatrix(n_, n_);
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = 1; j < i; ++j) out.lambda(i - 1, j - 1) = lam_(i, j);
    return out;
  }

 private:
  Integer& G(std::size_t i, std::size_t j) { return g_(i - 1, j - 1); }
  Integer& L(std::size_t i, std::size_t j) { return lam_(i, j); }

  void extend(std::size_t k) {
    Integer u, t;
    for (std::size_t j = 1; j <= k; ++j) {
      u = G(k, j);
      for (std::size_t i = 1; i < j; ++i) {
        u *= d_[i];
        mpz_submul(u.get_mpz_t(), L(k, i).get_mpz_t(), L(j, i).get_mpz_t());
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        L(k, j) = u;
      } else {
        if (sgn(u) <= 0) fail(ErrorKind::DegenerateBasis, "rows are linearly dependent");
        d_[k] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    Integer two_lam = 2 * L(k, l);
    if (abs(two_lam) <= d_[l]) return;
    // q = nearest integer to lambda / d_l
    Integer q;
    Integer num = two_lam + d_[l];
    Integer den = 2 * d_[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t c = 0; c < n_; ++c) mpz_submul(u_(k - 1, c).get_mpz_t(), q.get_mpz_t(), u_(l - 1, c).get_mpz_t());
    for (std::size_t c = 1; c <= n_; ++c) mpz_submul(G(k, c).get_mpz_t(), q.get_mpz_t(), G(l, c).get_mpz_t());
    for (std::size_t r = 1; r <= n_; ++r) {
      if (r == k) continue;
      G(r, k) = G(k, r);
    }
    mpz_submul(G(k, k).get_mpz_t(), q.get_mpz_t(), G(k, l).get_mpz_t());
    mpz_submul(L(k, l).get_mpz_t(), q.get_mpz_t(), d_[l].get_mpz_t());
    for (std::size_t i = 1; i < l; ++i) mpz_submul(L(k, i).get_mpz_t(), q.get_mpz_t(), L(l, i).get_mpz_t());
  }

  // 4·d_k·d_{k-2} < 3·d_{k-1}^2 - 4·lambda_{k,k-1}^2  <=>  Lovasz condition with delta = 3/4 fails.
  bool lovasz_fails(std::size_t k) {
    Integer lhs = 4 * d_[k] * d_[k - 2];
    Integer rhs = 3 * d_[k - 1] * d_[k - 1] - 4 * L(k, k - 1) * L(k, k - 1);
    return lhs < rhs;
  }

  void swap(std::size_t k, std::size_t kmax) {
    u_.swap_rows(k - 1, k - 2);
    g_.swap_rows(k - 1, k - 2);
    for (std::size_t r = 0; r < n_; ++r) std::swap(g_(r, k - 1), g_(r, k - 2));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(L(k, j), L(k - 1, j));
    Integer lam = L(k, k - 1);
    Integer b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k - 1].get_mpz_t());
    Integer t, x;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      t = L(i, k);
      x = d_[k] * L(i, k - 1) - lam * t;
      mpz_divexact(L(i, k).get_mpz_t(), x.get_mpz_t(), d_[k - 1].get_mpz_t());
      x = b * t + lam * L(i, k);
      mpz_divexact(L(i, k - 1).get_mpz_t(), x.get_mpz_t(), d_[k].get_mpz_t());
    }
    d_[k - 1] = b;
  }

  std::size_t n_;
  IntMatrix g_;
  IntMatrix u_;
  std::vector<Integer> d_;
  IntMatrix lam_;
};

// Makes the first nonzero coordinate of every row positive; returns the signs applied.
std::vector<int> normalize_signs(RatMatrix& b, IntMatrix& u) {
  std::vector<int> sign(b.rows(), 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      int s = sgn(b(i, j));
      if (s == 0) continue;
      if (s < 0) {
        sign[i] = -1;
        for (auto& x : b.row(i)) x = -x;
        for (auto& x : u.row(i)) x = -x;
      }
      break;
    }
  }
  return sign;
}

}  // namespace

IntegralLll lll_gram(IntMatrix g) { return GramLll(std::move(g)).run(); }

LllBasis lll_reduce_basis(const RatMatrix& b) {
  std::size_t n = b.rows();
  RatMatrix g = gram(b);
  Integer s = denominator_lcm(g);
  IntMatrix gi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gi(i, j) = Rational(g(i, j) * s).get_num();
  IntegralLll r = lll_gram(std::move(gi));
  LllBasis out;
  out.transform = std::move(r.transform);
  out.basis = mul(out.transform, b);
  std::vector<int> sign = normalize_signs(out.basis, out.transform);
  out.gso.gs_norms_sq.resize(n);
  out.gso.mu = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.gso.gs_norms_sq[i] = Rational(r.d[i + 1], r.d[i] * s);
    out.gso.gs_norms_sq[i].canonicalize();
    for (std::size_t j = 0; j < i; ++j) {
      Rational m(r.lambda(i, j), r.d[j + 1]);
      m.canonicalize();
      out.gso.mu(i, j) = sign[i] * sign[j] < 0 ? Rational(-m) : m;
    }
  }
  return out;
}

LllBasis lll_reduce(const Lattice& l) { return lll_reduce_basis(l.basis); }

IntMatrix lll_reduce_rows(const IntMatrix& rows) {
  IntegralLll r = lll_gram(gram(rows));
  IntMatrix out = mul(r.transform, rows);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      int s = sgn(out(i, j));
      if (s == 0) continue;
      if (s < 0)
        for (auto& x : out.row(i)) x = -x;
      break;
    }
  }
  return out;
}

bool is_lll_reduced(const GsoData& g) {
  std::size_t n = g.gs_norms_sq.size();
  Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(g.mu(i, j)) > half) return false;
  Rational delta(3, 4);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rational& m = g.mu(i + 1, i);
    if (delta * g.gs_norms_sq[i] > g.gs_norms_sq[i + 1] + m * m * g.gs_norms_sq[i]) return false;
  }
  return true;
}

Sublattice lll_dsp_oracle(const Lattice& l, std::size_t ell) {
  std::size_t n = l.rank();
  if (ell < 1 || ell > n) fail(ErrorKind::InvalidRank, "ell must lie in [1, n]");
  LllBasis r = lll_reduce(l);
  Sublattice s{l, r.transform.slice_rows(0, ell)};
  // GS decay |b~_i|^2 <= 2|b~_{i+1}|^2 gives gamma^2 <= 2^(ell(n-ell)/2).
  Rational sub = 1, all = 1;
  for (std::size_t i = 0; i < n; ++i) {
    all *= r.gso.gs_norms_sq[i];
    if (i < ell) sub *= r.gso.gs_norms_sq[i];
  }
  DensityRatio dr{sub, all, ell, n};
  if (!dr.within_power(2, ell * (n - ell), 2))
    fail(ErrorKind::InvariantViolation, "LLL prefix exceeds the 2^(l(n-l)/4) density bound");
  return s;
}

bool meets_planner_lll_bound(const DensityRatio& r) {
  return r.within_power(Rational(4, 3), r.ell * (r.n - r.ell), 2);
}

}  // namespace latrec
