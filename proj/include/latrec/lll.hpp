#pragma once

#include "latrec/lattice.hpp"

namespace latrec {

struct LllBasis {
  RatMatrix basis;
  GsoData gso;
  IntMatrix transform;  // basis = transform · input basis, unimodular
};

// Integral LLL on a positive definite integer Gram matrix.
struct IntegralLll {
  IntMatrix transform;
  std::vector<Integer> d;  // d[i] = Gram determinant of the first i reduced vectors
  IntMatrix lambda;        // lambda(i, j) = d[j+1] · mu(i, j) for j < i
};

IntegralLll lll_gram(IntMatrix g);

LllBasis lll_reduce(const Lattice& l);
LllBasis lll_reduce_basis(const RatMatrix& b);
IntMatrix lll_reduce_rows(const IntMatrix& rows);

// Both LLL conditions with delta = 3/4, checked exactly.
bool is_lll_reduced(const GsoData& g);

Sublattice lll_dsp_oracle(const Lattice& l, std::size_t ell);
// gamma <= (4/3)^(ell(n-ell)/4), the bound the planner assigns to LLL leaves.
bool meets_planner_lll_bound(const DensityRatio& r);

}  // namespace latrec
