#pragma once

#include "latrec/lll.hpp"

namespace latrec {

struct SizeProfile {
  Integer q;           // least q with L ⊆ Z^d / q
  double log2_delta;   // (1/rank)·log2 det(L)
  double log2_beta;    // log2 max{Delta(L), q(L)}
};

SizeProfile size_profile(const Lattice& l);

enum class StepOp { Dual, Intersect };

// beta(L') <= beta(L) + n^2/2 and q(L') | q(L) for intersections;
// beta(L*) <= 4n·beta(L) and q(L*) <= (q·Delta)^(2n) for duals.
bool beta_step_bounds(const SizeProfile& before, StepOp op, const SizeProfile& after, std::size_t n);
// beta <= (4n)^D · (b0 + I·n^2/2) along a path with D duals and I intersections.
bool beta_path_bound(double beta, double b0, std::size_t n, std::size_t duals, std::size_t inters);

// Bitlength bound 4n^3·m + 4n^4 for the LLL output of a rank-n input of bitlength m.
std::size_t lll_bitlength_bound(std::size_t n, std::size_t m);
// q·|b_j| <= q^n · 2^(n^2/4) · det(L) for every vector of an LLL-reduced basis (squared form).
bool lll_entry_bound_holds(const LllBasis& b);

struct RescaleMap {
  std::vector<Integer> alphas;
  Rational gamma;
};

RescaleMap rescale_map(const LllBasis& b, const Rational& gamma);
LllBasis apply_rescale(const LllBasis& b, const RescaleMap& map);
// |b'_1|/2^n <= |b~'_i| <= |b'_i| <= (2·gamma)^i·|b'_1| for all i, squared.
bool rescale_sandwich_holds(const LllBasis& b, const Rational& gamma);
// alpha_i < alpha_{i+1} implies |b~'_{i+1}| > (gamma/2)·|b~'_i|.
bool rescale_gap_holds(const LllBasis& b, const RescaleMap& map);

enum class ConstantsProfile { Scaled, Literal };

struct RoundingParams {
  ConstantsProfile profile = ConstantsProfile::Scaled;
  unsigned c1 = 0;  // extra headroom bits below the per-entry budget
  unsigned c2 = 2;  // rescale gap gamma_r = 2^c2 (scaled profile)
};

struct RoundedBasis {
  RatMatrix b_prime;      // integer entries
  RatMatrix original;     // B
  IntMatrix transform;    // B^(1) = transform · B (LLL step)
  Integer scale_m;        // M
  std::size_t m_prime = 0;
  std::size_t ell = 0;
  bool corner_case = false;
  ConstantsProfile profile = ConstantsProfile::Scaled;
};

// Per-entry bit budget and the resulting log2 M for a rank-n, dimension-d input.
struct RoundingPlan {
  std::size_t entry_bits = 0;
  std::size_t log2_m = 0;
  std::size_t gap_bits = 0;  // log2 gamma_r
};
RoundingPlan rounding_plan(std::size_t n, std::size_t d, std::size_t m_prime, const RoundingParams& p);

RoundedBasis round_basis(const RatMatrix& b, std::size_t ell, std::size_t m_prime,
                         const RoundingParams& p = RoundingParams{});
Sublattice lift_solution(const RoundedBasis& rb, const IntMatrix& z);

// Lifted gamma <= max{1, (1 + eps)·rounded gamma}; eps = 2^-20 (scaled) or 2^(3n^5 - m') (literal).
bool lifted_gamma_ok(const RoundedBasis& rb, const IntMatrix& z);
// ‖B'z‖^2 >= (M/3^n)^2·‖z‖^2.
bool rounded_lower_bound_holds(const RoundedBasis& rb, const IntVector& z);

}  // namespace latrec
