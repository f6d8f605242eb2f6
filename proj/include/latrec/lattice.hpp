#pragma once

#include <json.hpp>

#include "latrec/exactnum.hpp"

namespace latrec {

struct Lattice {
  RatMatrix basis;

  Lattice() = default;
  explicit Lattice(RatMatrix b);  // checks linear independence
  static Lattice unchecked(RatMatrix b);

  std::size_t rank() const { return basis.rows(); }
  std::size_t ambient_dim() const { return basis.cols(); }
  Rational det_sq() const;
};

struct Sublattice {
  Lattice parent;
  IntMatrix coeffs;  // rows: coefficient vectors w.r.t. parent.basis

  std::size_t rank() const { return coeffs.rows(); }
  RatMatrix basis() const { return mul(coeffs, parent.basis); }
  Lattice lattice() const { return Lattice::unchecked(basis()); }
};

// gamma(L, L')^2 = det_sq_sub / det_sq_parent^(ell/n), kept as exact pieces.
struct DensityRatio {
  Rational det_sq_sub;
  Rational det_sq_parent;
  std::size_t ell = 0;
  std::size_t n = 0;

  // gamma^2 <= rho_sq, via det_sq_sub^n <= rho_sq^n · det_sq_parent^ell.
  bool within(const Rational& rho_sq) const;
  // gamma^2 <= base^(num/den) for a positive rational base.
  bool within_power(const Rational& base, unsigned long num, unsigned long den) const;
  // gamma^2 <= upper_n where upper_n is a rational upper bound on rho_sq^n.
  bool within_nth_power(const Rational& upper_n) const;
  double log2_gamma_sq() const;
};

Lattice dual(const Lattice& l);

// L ∩ span(Lp)^⊥ for Lp a sublattice of L*; returned as a sublattice of L.
Sublattice intersect_orthogonal_sub(const Lattice& l, const Sublattice& lp);
Lattice intersect_orthogonal(const Lattice& l, const Sublattice& lp);
// Same, with Lp given by integer coefficients w.r.t. the basis dual(l) returns.
// Returns the coefficient rows (w.r.t. l.basis) of a basis of the intersection.
IntMatrix intersect_dual_coeffs(const IntMatrix& dual_coeffs);

Lattice project_orthogonal(const Lattice& l, const Sublattice& lp);
RatMatrix generating_set_to_basis(const RatMatrix& vectors, std::size_t rank);

bool is_primitive(const Sublattice& lp);
Sublattice primitivize(const Sublattice& lp);
DensityRatio density_ratio(const Sublattice& lp);
DensityRatio density_ratio(const Lattice& parent, const RatMatrix& sub_basis);

// Coordinates of the rows of v w.r.t. l.basis, when they are all lattice vectors.
bool lattice_coordinates(const Lattice& l, const RatMatrix& v, IntMatrix& out);
bool contains(const Lattice& l, const RatMatrix& v);
bool same_lattice(const Lattice& a, const Lattice& b);

nlohmann::json to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

}  // namespace latrec
