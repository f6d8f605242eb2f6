#pragma once

#include "latrec/exactnum.hpp"

namespace latrec {

// Row Hermite normal form: transform·A = hnf, transform unimodular, nonzero
// rows of hnf first, pivots positive, entries above each pivot reduced mod it.
struct Echelon {
  IntMatrix hnf;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_echelon(const IntMatrix& a);

// Basis (rows) of {c in Z^n : Z·cᵀ = 0} for Z with n columns, LLL-reduced.
IntMatrix integer_kernel(const IntMatrix& z);

// True iff the rows of Z extend to a unimodular matrix.
bool rows_primitive(const IntMatrix& z);

// Integer points of span_Q(rows of Z): a basis of Z^n ∩ span(Z).
IntMatrix saturate_rows(const IntMatrix& z);

// Integer solution x of x·A = v (A with independent rows), if any.
bool integer_coordinates(const RatMatrix& a, const RatMatrix& v, IntMatrix& out);

}  // namespace latrec
