#include "latrec/intmat.hpp"

#include "latrec/errors.hpp"
#include "latrec/lll.hpp"

namespace latrec {

namespace {

// r_i := s·r_i + t·r_j over all columns of both matrices.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                  const Integer& c, const Integer& d) {
  // (r_i, r_j) <- (a·r_i + b·r_j, c·r_i + d·r_j)
  Integer x, y;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    x = a * m(i, k) + b * m(j, k);
    y = c * m(i, k) + d * m(j, k);
    m(i, k) = x;
    m(j, k) = y;
  }
}

void sub_multiple(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (sgn(m(j, k)) != 0) mpz_submul(m(i, k).get_mpz_t(), q.get_mpz_t(), m(j, k).get_mpz_t());
}

}  // namespace

Echelon row_echelon(const IntMatrix& a) {
  Echelon e;
  e.hnf = a;
  e.transform = IntMatrix::identity(a.rows());
  IntMatrix& h = e.hnf;
  IntMatrix& u = e.transform;
  std::size_t m = a.rows();
  std::size_t r = 0;
  Integer g, s, t, p, q;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const Integer x = h(r, c), y = h(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      p = -y / g;
      q = x / g;
      combine_rows(h, r, i, s, t, p, q);
      combine_rows(u, r, i, s, t, p, q);
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      for (std::size_t k = 0; k < h.cols(); ++k) h(r, k) = -h(r, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(r, k) = -u(r, k);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      sub_multiple(h, i, r, q);
      sub_multiple(u, i, r, q);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

IntMatrix integer_kernel(const IntMatrix& z) {
  std::size_t n = z.cols();
  if (z.rows() == 0) return IntMatrix::identity(n);
  Echelon e = row_echelon(transpose(z));
  IntMatrix k = e.transform.slice_rows(e.rank, n - e.rank);
  if (k.rows() > 1) k = lll_reduce_rows(k);
  return k;
}

bool rows_primitive(const IntMatrix& z) {
  if (z.rows() == 0) return true;
  Echelon e = row_echelon(transpose(z));
  if (e.rank != z.rows()) return false;
  for (std::size_t i = 0; i < e.rank; ++i)
    if (e.hnf(i, e.pivot_cols[i]) != 1) return false;
  return true;
}

IntMatrix saturate_rows(const IntMatrix& z) {
  IntMatrix k = integer_kernel(z);
  if (k.rows() == 0) return IntMatrix::identity(z.cols());
  return integer_kernel(k);
}

bool integer_coordinates(const RatMatrix& a, const RatMatrix& v, IntMatrix& out) {
  if (v.cols() != a.cols()) return false;
  RatMatrix x = mul(mul_transpose(v, a), inverse(gram(a)));
  IntMatrix xi(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).get_den() != 1) return false;
      xi(i, j) = x(i, j).get_num();
    }
  if (!(mul(xi, a) == v)) return false;
  out = std::move(xi);
  return true;
}

}  // namespace latrec
