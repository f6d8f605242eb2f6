#pragma once

#include <optional>

#include "latrec/lattice.hpp"

namespace latrec {

struct HermiteBound {
  enum class Source { ExactTable, Blichfeldt };
  int k = 0;
  double log2_delta_k = 0;  // rounded up
  Source source = Source::ExactTable;
};

HermiteBound hermite_bound(int k);
// delta_k^k exactly, for k <= 8 (all rational).
std::optional<Rational> hermite_power_exact(int k);
// log2(delta_k) in long double, rounded up; Blichfeldt above 8.
long double log2_hermite_upper(int k);
long double log2_blichfeldt_upper(int k);

struct SvpResult {
  IntVector vector;  // coefficients w.r.t. the input basis
  Rational norm_sq;
};

std::size_t default_max_oracle_rank();  // LATREC_MAX_ORACLE_RANK or 14

SvpResult svp_exact(const Lattice& l, std::size_t max_rank = default_max_oracle_rank());
Sublattice hsvp_oracle(const Lattice& l, std::size_t max_rank = default_max_oracle_rank());

}  // namespace latrec
