#include <gtest/gtest.h>

#include "helpers.hpp"
#include "latrec/errors.hpp"
#include "latrec/generate.hpp"
#include "latrec/intmat.hpp"
#include "latrec/lll.hpp"

using namespace latrec;
using namespace latrec::test;

namespace {

Rational norm_sq(const RatMatrix& b, std::size_t i) { return dot(b.row(i), b.row(i)); }

// Independent check of both LLL conditions from the textbook definition.
bool textbook_reduced(const RatMatrix& b) {
  std::size_t n = b.rows();
  std::vector<RatVector> bs;
  std::vector<Rational> nn;
  RatMatrix mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(b.row(i).begin(), b.row(i).end());
    for (std::size_t j = 0; j < i; ++j) {
      mu(i, j) = dot(b.row(i), bs[j]) / nn[j];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= mu(i, j) * bs[j][c];
    }
    nn.push_back(dot(v, v));
    bs.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (2 * abs(mu(i, j)) > 1) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (nn[i] < (Rational(3, 4) - mu(i, i - 1) * mu(i, i - 1)) * nn[i - 1]) return false;
  return true;
}

}  // namespace

TEST(Lll, UnimodularInput) {
  LllBasis r = lll_reduce(lat({{1, 0}, {1, 1}}));
  EXPECT_EQ(norm_sq(r.basis, 0), 1);
  EXPECT_EQ(norm_sq(r.basis, 1), 1);
  EXPECT_TRUE(same_lattice(Lattice(r.basis), lat({{1, 0}, {0, 1}})));
}

TEST(Lll, DeterminantOneIsZ2) {
  Lattice l = lat({{4, 1}, {9, 2}});
  EXPECT_EQ(l.det_sq(), 1);
  LllBasis r = lll_reduce(l);
  EXPECT_EQ(norm_sq(r.basis, 0), 1);
  EXPECT_TRUE(same_lattice(Lattice(r.basis), lat({{1, 0}, {0, 1}})));
}

TEST(Lll, ReducedInputUnchanged) {
  RatMatrix b = rm({{1, 0, 0}, {0, 2, 0}, {0, 1, 3}});
  EXPECT_EQ(lll_reduce_basis(b).basis, b);
}

TEST(Lll, TransformIsUnimodular) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Lattice l = random_lattice(5, 6, LatticeKind::UniformInteger, rng);
    LllBasis r = lll_reduce(l);
    EXPECT_EQ(mul(r.transform, l.basis), r.basis);
    EXPECT_EQ(gram_det_sq(to_rational(r.transform)), 1);
  }
}

TEST(Lll, RandomInputsSatisfyTextbookConditions) {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 8);
    Lattice l = random_lattice(n, 1 + t % 12, t % 3 ? LatticeKind::UniformInteger : LatticeKind::QaryLike, rng);
    LllBasis r = lll_reduce(l);
    EXPECT_TRUE(textbook_reduced(r.basis));
    EXPECT_TRUE(is_lll_reduced(r.gso));
    EXPECT_TRUE(same_lattice(Lattice(r.basis), l));
    // |b_1|^2 <= 2^((n-1)/2) det^(2/n), cross-power form
    Rational lhs = pow_q(norm_sq(r.basis, 0), n);
    Rational rhs = Rational(Integer(1) << static_cast<mp_bitcnt_t>(n * (n - 1) / 2)) * l.det_sq();
    EXPECT_LE(lhs, rhs);
  }
}

TEST(Lll, RationalAndNonSquareBases) {
  RatMatrix b = rm({{q(1, 2), q(1, 3), 0, 1}, {q(5, 7), 0, 2, 0}, {1, 1, 1, q(1, 11)}});
  LllBasis r = lll_reduce_basis(b);
  EXPECT_TRUE(textbook_reduced(r.basis));
  EXPECT_TRUE(same_lattice(Lattice(r.basis), Lattice(b)));
}

TEST(Lll, SignNormalized) {
  LllBasis r = lll_reduce(lat({{-1, 0}, {0, -1}}));
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t c = 0;
    while (r.basis(i, c) == 0) ++c;
    EXPECT_GT(r.basis(i, c), 0);
  }
}

TEST(Lll, IsLllReducedRejects) {
  EXPECT_FALSE(is_lll_reduced(gso(rm({{1, 0}, {3, 1}}))));  // size reduction
  EXPECT_FALSE(is_lll_reduced(gso(rm({{4, 0}, {0, 1}}))));  // Lovasz
  EXPECT_TRUE(is_lll_reduced(gso(rm({{1, 0}, {0, 4}}))));
}

TEST(LllDsp, UnitSquare) {
  Sublattice s = lll_dsp_oracle(lat({{1, 0}, {0, 1}}), 1);
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_EQ(norm_sq(s.basis(), 0), 1);
  EXPECT_TRUE(density_ratio(s).within(1));
  EXPECT_TRUE(meets_planner_lll_bound(density_ratio(s)));
}

TEST(LllDsp, DiagonalOneTwo) {
  Lattice l = lat({{1, 0}, {0, 2}});
  Sublattice s = lll_dsp_oracle(l, 1);
  EXPECT_EQ(s.basis(), rm({{1, 0}}));
  DensityRatio r = density_ratio(s);
  // gamma^2 = |v|^2 / det = 1/2
  EXPECT_EQ(r.det_sq_sub * r.det_sq_sub, q(1, 4) * r.det_sq_parent);
  EXPECT_TRUE(r.within(q(1, 2)));
  EXPECT_FALSE(r.within(q(49, 100)));
  EXPECT_TRUE(meets_planner_lll_bound(r));
}

TEST(LllDsp, FullRankIsWholeLattice) {
  Lattice l = lat({{1, 2, 0}, {0, 1, 1}, {1, 0, 3}});
  Sublattice s = lll_dsp_oracle(l, 3);
  EXPECT_TRUE(same_lattice(s.lattice(), l));
  EXPECT_TRUE(density_ratio(s).within(1));
}

TEST(LllDsp, PrimitivePrefixOnRandom) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 3 + static_cast<std::size_t>(t % 6);
    Lattice l = random_lattice(n, 5, LatticeKind::UniformInteger, rng);
    for (std::size_t ell = 1; ell < n; ++ell) {
      Sublattice s = lll_dsp_oracle(l, ell);
      EXPECT_TRUE(is_primitive(s));
      EXPECT_TRUE(rows_primitive(s.coeffs));
      // gamma^2 <= 2^(l(n-l)/2)
      EXPECT_TRUE(density_ratio(s).within_power(2, ell * (n - ell), 2));
    }
  }
}

TEST(LllDsp, RankOutOfRange) {
  EXPECT_THROW(lll_dsp_oracle(lat({{1, 0}, {0, 1}}), 0), Error);
  EXPECT_THROW(lll_dsp_oracle(lat({{1, 0}, {0, 1}}), 3), Error);
}
