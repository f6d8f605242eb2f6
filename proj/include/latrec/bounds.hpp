#pragma once

#include "latrec/lattice.hpp"

namespace latrec {

// Values are carried in log2 and nudged upward after every floating operation,
// so they stay upper bounds on the real quantity they stand for.
long double up(long double x);
long double add_up(long double a, long double b);
long double mul_up(long double a, long double b);

// A dyadic rational >= 2^x.
Rational pow2_upper(long double x);

// gamma <= 2^log2_gamma, checked as det_sq_sub^n <= 2^(2·n·log2_gamma) · det_sq_parent^ell
// with the power of two replaced by a rational upper approximation.
bool gamma_within_log2(const DensityRatio& r, long double log2_gamma);

}  // namespace latrec
