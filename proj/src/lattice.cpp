#include "latrec/lattice.hpp"

#include "latrec/errors.hpp"
#include "latrec/intmat.hpp"
#include "latrec/lll.hpp"

namespace latrec {

Lattice::Lattice(RatMatrix b) : basis(std::move(b)) {
  if (basis.rows() > basis.cols() || matrix_rank(basis) != basis.rows())
    fail(ErrorKind::DegenerateBasis, "basis rows are linearly dependent");
}

Lattice Lattice::unchecked(RatMatrix b) {
  Lattice l;
  l.basis = std::move(b);
  return l;
}

Rational Lattice::det_sq() const { return gram_det_sq(basis); }

bool DensityRatio::within(const Rational& rho_sq) const {
  return pow_q(det_sq_sub, n) <= pow_q(rho_sq, n) * pow_q(det_sq_parent, ell);
}

bool DensityRatio::within_power(const Rational& base, unsigned long num, unsigned long den) const {
  return pow_q(det_sq_sub, n * den) <= pow_q(base, num * n) * pow_q(det_sq_parent, ell * den);
}

bool DensityRatio::within_nth_power(const Rational& upper_n) const {
  return pow_q(det_sq_sub, n) <= upper_n * pow_q(det_sq_parent, ell);
}

double DensityRatio::log2_gamma_sq() const {
  return log2_q(det_sq_sub) - static_cast<double>(ell) / static_cast<double>(n) * log2_q(det_sq_parent);
}

Lattice dual(const Lattice& l) {
  RatMatrix g = gram(l.basis);
#ifdef LATREC_FAULT_INJECT
  RatMatrix d = mul(inverse(g), l.basis);
  for (std::size_t c = 0; c < d.cols(); ++c) d(0, c) *= 2;
  return Lattice::unchecked(d);
#else
  return Lattice::unchecked(mul(inverse(g), l.basis));
#endif
}

IntMatrix intersect_dual_coeffs(const IntMatrix& dual_coeffs) { return integer_kernel(dual_coeffs); }

Sublattice intersect_orthogonal_sub(const Lattice& l, const Sublattice& lp) {
  std::size_t n = l.rank();
  if (lp.rank() >= n) fail(ErrorKind::InvalidRank, "sublattice of the dual must have rank < n");
  RatMatrix w = lp.basis();
  if (w.cols() != l.ambient_dim()) fail(ErrorKind::NotASublattice, "ambient dimensions differ");
  // <w, b_j> are the coordinates of w w.r.t. the dual basis.
  RatMatrix c = mul_transpose(w, l.basis);
  IntMatrix z(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c(i, j).get_den() != 1) fail(ErrorKind::NotASublattice, "vector is not in the dual lattice");
      z(i, j) = c(i, j).get_num();
    }
  if (!(mul(z, dual(l).basis) == w)) fail(ErrorKind::NotASublattice, "vector is outside span(L)");
  if (!rows_primitive(z)) fail(ErrorKind::NotPrimitive, "sublattice of the dual is not primitive");
  return Sublattice{l, intersect_dual_coeffs(z)};
}

Lattice intersect_orthogonal(const Lattice& l, const Sublattice& lp) {
  return intersect_orthogonal_sub(l, lp).lattice();
}

Lattice project_orthogonal(const Lattice& l, const Sublattice& lp) {
  std::size_t n = l.rank();
  if (lp.rank() >= n) fail(ErrorKind::InvalidRank, "projection onto a rank-0 complement");
  RatMatrix w = lp.basis();
  if (!contains(l, w)) fail(ErrorKind::NotASublattice, "sublattice is not contained in L");
  // v - (v·Wᵀ)(W·Wᵀ)^{-1} W for every basis vector v.
  RatMatrix coef = mul(mul_transpose(l.basis, w), inverse(gram(w)));
  RatMatrix along = mul(coef, w);
  RatMatrix proj = l.basis;
  for (std::size_t i = 0; i < proj.rows(); ++i)
    for (std::size_t j = 0; j < proj.cols(); ++j) proj(i, j) -= along(i, j);
  return Lattice::unchecked(generating_set_to_basis(proj, n - lp.rank()));
}

RatMatrix generating_set_to_basis(const RatMatrix& vectors, std::size_t rank) {
  Integer q = denominator_lcm(vectors);
  IntMatrix a(vectors.rows(), vectors.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational x = vectors(i, j) * q;
      a(i, j) = x.get_num();
    }
  Echelon e = row_echelon(a);
  if (e.rank != rank) fail(ErrorKind::RankMismatch, "generating set has rank " + std::to_string(e.rank));
  IntMatrix b = e.hnf.slice_rows(0, rank);
  if (rank > 1) b = lll_reduce_rows(b);
  RatMatrix out(rank, vectors.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out(i, j) = Rational(b(i, j), q);
      out(i, j).canonicalize();
    }
  return out;
}

bool is_primitive(const Sublattice& lp) { return rows_primitive(lp.coeffs); }

Sublattice primitivize(const Sublattice& lp) {
  if (rows_primitive(lp.coeffs)) return lp;
  return Sublattice{lp.parent, saturate_rows(lp.coeffs)};
}

DensityRatio density_ratio(const Lattice& parent, const RatMatrix& sub_basis) {
  DensityRatio r;
  r.det_sq_sub = gram_det_sq(sub_basis);
  r.det_sq_parent = parent.det_sq();
  r.ell = sub_basis.rows();
  r.n = parent.rank();
  return r;
}

DensityRatio density_ratio(const Sublattice& lp) { return density_ratio(lp.parent, lp.basis()); }

bool lattice_coordinates(const Lattice& l, const RatMatrix& v, IntMatrix& out) {
  return integer_coordinates(l.basis, v, out);
}

bool contains(const Lattice& l, const RatMatrix& v) {
  IntMatrix tmp;
  return lattice_coordinates(l, v, tmp);
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  return a.rank() == b.rank() && a.ambient_dim() == b.ambient_dim() && contains(a, b.basis) &&
         contains(b, a.basis);
}

nlohmann::json to_json(const Lattice& l) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : l.basis.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return {{"rank", l.rank()}, {"ambient_dim", l.ambient_dim()}, {"basis", std::move(rows)}};
}

Lattice lattice_from_json(const nlohmann::json& j) {
  try {
    std::size_t n = j.at("rank").get<std::size_t>();
    std::size_t d = j.at("ambient_dim").get<std::size_t>();
    const auto& rows = j.at("basis");
    if (rows.size() != n) fail(ErrorKind::Parse, "basis row count differs from rank");
    RatMatrix b(n, d);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != d) fail(ErrorKind::Parse, "basis row length differs from ambient_dim");
      for (std::size_t k = 0; k < d; ++k) {
        const auto& e = rows[i][k];
        b(i, k) = e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>());
      }
    }
    return Lattice(std::move(b));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  IntMatrix m;
  for (const auto& row : j) {
    std::vector<Integer> r;
    for (const auto& e : row) r.emplace_back(e.is_string() ? e.get<std::string>() : std::to_string(e.get<long long>()));
    m.append_row(r);
  }
  return m;
}

}  // namespace latrec
