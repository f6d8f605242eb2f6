#include "latrec/exactnum.hpp"

#include <cmath>

#include "latrec/errors.hpp"

namespace latrec {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

template <class T>
static Matrix<T> transpose_impl(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

RatMatrix transpose(const RatMatrix& m) { return transpose_impl(m); }
IntMatrix transpose(const IntMatrix& m) { return transpose_impl(m); }

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        t = a(i, k) * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

RatMatrix mul(const IntMatrix& a, const RatMatrix& b) {
  // Accumulate over a common denominator per column to avoid repeated gcds.
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Integer den = 1;
    for (std::size_t k = 0; k < b.rows(); ++k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b(k, j).get_den_mpz_t());
    std::vector<Integer> col(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) col[k] = b(k, j).get_num() * (den / b(k, j).get_den());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (sgn(a(i, k)) != 0 && sgn(col[k]) != 0) mpz_addmul(s.get_mpz_t(), a(i, k).get_mpz_t(), col[k].get_mpz_t());
      c(i, j) = Rational(s, den);
      c(i, j).canonicalize();
    }
  }
  return c;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    t = a[i] * b[i];
    s += t;
  }
  return s;
}

RatMatrix mul_transpose(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) c(i, j) = dot(a.row(i), b.row(j));
  return c;
}

RatMatrix gram(const RatMatrix& b) {
  // Scale each row to integers so the inner products are integer dot products.
  std::size_t n = b.rows(), d = b.cols();
  std::vector<Integer> scale(n, 1);
  IntMatrix num(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), b(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < d; ++j) num(i, j) = b(i, j).get_num() * (scale[i] / b(i, j).get_den());
  }
  IntMatrix g = gram(num);
  RatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = Rational(g(i, j), scale[i] * scale[j]);
      r(i, j).canonicalize();
    }
  return r;
}

IntMatrix gram(const IntMatrix& b) {
  std::size_t n = b.rows();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < b.cols(); ++k) mpz_addmul(s.get_mpz_t(), b(i, k).get_mpz_t(), b(j, k).get_mpz_t());
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

GsoData gso_from_gram(const RatMatrix& g) {
  std::size_t n = g.rows();
  GsoData out;
  out.gs_norms_sq.resize(n);
  out.mu = RatMatrix::identity(n);
  RatMatrix r(n, n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) {
        t = out.mu(j, k) * r(i, k);
        s -= t;
      }
      r(i, j) = s;
      if (j < i) out.mu(i, j) = s / r(j, j);
    }
    if (sgn(r(i, i)) <= 0) fail(ErrorKind::DegenerateBasis, "rows are linearly dependent");
    out.gs_norms_sq[i] = r(i, i);
  }
  return out;
}

GsoData gso(const RatMatrix& b) { return gso_from_gram(gram(b)); }

Rational gram_det_sq(const RatMatrix& b) {
  Rational p = 1;
  for (const auto& x : gso(b).gs_norms_sq) p *= x;
  return p;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::SingularMatrix, "matrix is not square");
  std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  Rational f, t;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(c, j)) != 0) {
          t = f * a(c, j);
          a(i, j) -= t;
        }
        if (sgn(inv(c, j)) != 0) {
          t = f * inv(c, j);
          inv(i, j) -= t;
        }
      }
    }
  }
  return inv;
}

RatMatrix solve_left(const RatMatrix& a, const RatMatrix& rhs) { return mul(rhs, inverse(a)); }

std::size_t matrix_rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rank = 0;
  Rational f, t;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      f = a(i, c) / a(rank, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        t = f * a(rank, j);
        a(i, j) -= t;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t bitlength(const Integer& x) {
  // ceil(log2(|x|+1)) magnitude bits plus one sign bit.
  std::size_t mag = sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
  return mag + 1;
}

std::size_t bitlength(const Rational& x) {
  return bitlength(Integer(x.get_num())) + bitlength(Integer(x.get_den()));
}

std::size_t bitlength(const RatMatrix& m) {
  std::size_t s = 0;
  for (const auto& x : m.entries()) s += bitlength(x);
  return s;
}

std::size_t bitlength(const IntMatrix& m) {
  std::size_t s = 0;
  for (const auto& x : m.entries()) s += bitlength(x);
  return s;
}

Integer denominator_lcm(const RatMatrix& m) {
  Integer l = 1;
  for (const auto& x : m.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Integer floor_q(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer round_q(const Rational& x) { return floor_q(x + Rational(1, 2)); }

Integer trunc_q(const Rational& x) {
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rational pow_q(const Rational& x, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

static double log2_z(const mpz_t z) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, z);
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

double log2_q(const Rational& x) { return log2_z(x.get_num_mpz_t()) - log2_z(x.get_den_mpz_t()); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::Parse, "bad rational '" + s + "'");
  if (sgn(r.get_den()) == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }
std::string to_string(const Integer& x) { return x.get_str(10); }

}  // namespace latrec
