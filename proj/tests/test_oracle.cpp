#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "latrec/errors.hpp"
#include "latrec/generate.hpp"
#include "latrec/oracle.hpp"
#include "latrec/verify.hpp"

using namespace latrec;
using namespace latrec::test;

namespace {

// Minimum over the box |x_i| <= r, no pruning.
Rational box_min(const Lattice& l, long r) {
  std::size_t n = l.rank();
  RatMatrix g = gram(l.basis);
  std::vector<long> x(n, -r);
  Rational best = -1;
  for (;;) {
    bool zero = true;
    for (long v : x) zero = zero && v == 0;
    if (!zero) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += g(i, j) * x[i] * x[j];
      if (best < 0 || s < best) best = s;
    }
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i] = -r, ++i;
    if (i == n) break;
    ++x[i];
  }
  return best;
}

}  // namespace

TEST(Hermite, RankOne) {
  HermiteBound h = hermite_bound(1);
  EXPECT_EQ(h.log2_delta_k, 0.0);
  EXPECT_EQ(*hermite_power_exact(1), 1);
}

TEST(Hermite, RankTwoAchievedByHexagonal) {
  EXPECT_EQ(*hermite_power_exact(2), q(4, 3));
  long double want = 0.2075187496394219092731305L;  // log2(2/sqrt 3)
  EXPECT_GE(static_cast<long double>(hermite_bound(2).log2_delta_k), want);
  EXPECT_GE(log2_hermite_upper(2), want);
  EXPECT_NEAR(hermite_bound(2).log2_delta_k, want, 1e-12);
  EXPECT_LE(log2_hermite_upper(2), log2_blichfeldt_upper(2));
  // A2 = {x in Z^3 : sum x = 0}: lambda_1^2 = 2, det^2 = 3, (lambda_1^2)^2 / det^2 = 4/3
  Lattice a2 = lat({{1, -1, 0}, {0, 1, -1}});
  SvpResult s = svp_exact(a2);
  EXPECT_EQ(s.norm_sq, 2);
  EXPECT_EQ(s.norm_sq * s.norm_sq / a2.det_sq(), *hermite_power_exact(2));
}

TEST(Hermite, BlichfeldtAtTen) {
  HermiteBound h = hermite_bound(10);
  EXPECT_EQ(h.source, HermiteBound::Source::Blichfeldt);
  EXPECT_FALSE(hermite_power_exact(10).has_value());
  double delta = std::exp2(h.log2_delta_k);
  double want = 2.0 / M_PI * std::pow(720.0, 0.2);
  EXPECT_NEAR(delta, 2.3733, 1e-4);
  EXPECT_GE(delta, want);
  EXPECT_NEAR(delta, want, 1e-9);
}

TEST(Hermite, ExactTableBelowBlichfeldt) {
  for (int k = 2; k <= 8; ++k) {
    EXPECT_EQ(hermite_bound(k).source, HermiteBound::Source::ExactTable);
    double exact = std::log2(hermite_power_exact(k)->get_d()) / k;
    EXPECT_GE(log2_hermite_upper(k), exact);
    EXPECT_LE(log2_hermite_upper(k), log2_blichfeldt_upper(k));
  }
}

TEST(Svp, IntegerLattice) {
  EXPECT_EQ(svp_exact(lat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).norm_sq, 1);
}

TEST(Svp, SmallTriangular) {
  Lattice l = lat({{2, 0}, {1, 2}});
  SvpResult s = svp_exact(l);
  EXPECT_EQ(s.norm_sq, 4);
  EXPECT_EQ(box_min(l, 3), 4);
  RatMatrix v = mul(IntMatrix(1, 2, s.vector), l.basis);
  EXPECT_EQ(dot(v.row(0), v.row(0)), 4);
}

TEST(Svp, MatchesBoxSearchOnRandomRankFour) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    Lattice l = random_lattice(4, 2, LatticeKind::UniformInteger, rng);
    Rational s = svp_exact(l).norm_sq;
    EXPECT_EQ(s, brute_force_min_norm_sq(l));
    // the LLL-derived box must be at least as good as a fixed generous box
    EXPECT_LE(s, box_min(l, 4));
  }
}

TEST(Svp, RankLimit) {
  Rng rng(1);
  Lattice l = random_lattice(6, 2, LatticeKind::UniformInteger, rng);
  try {
    svp_exact(l, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankTooLarge);
  }
}

TEST(HsvpOracle, Examples) {
  Sublattice a = hsvp_oracle(lat({{1, 0}, {0, 1}}));
  EXPECT_EQ(a.rank(), 1u);
  EXPECT_TRUE(density_ratio(a).within(1));
  Lattice b = lat({{2, 0}, {1, 2}});
  Sublattice s = hsvp_oracle(b);
  EXPECT_EQ(gram_det_sq(s.basis()), brute_force_min_norm_sq(b));
  EXPECT_TRUE(density_ratio(s).within_nth_power(*hermite_power_exact(2)));
  EXPECT_TRUE(is_primitive(s));
  Lattice one = lat({{3, 4}});
  Sublattice o = hsvp_oracle(one);
  EXPECT_TRUE(same_lattice(o.lattice(), one));
}

TEST(HsvpOracle, HermiteInequalityOnRandom) {
  Rng rng(4);
  for (int k = 2; k <= 6; ++k)
    for (int t = 0; t < 10; ++t) {
      Lattice l = random_lattice(static_cast<std::size_t>(k), 4, LatticeKind::UniformInteger, rng);
      Sublattice s = hsvp_oracle(l);
      EXPECT_TRUE(density_ratio(s).within_nth_power(*hermite_power_exact(k)));
    }
}

TEST(HsvpOracle, MaxRankFromEnvironment) {
  setenv("LATREC_MAX_ORACLE_RANK", "9", 1);
  EXPECT_EQ(default_max_oracle_rank(), 9u);
  unsetenv("LATREC_MAX_ORACLE_RANK");
  EXPECT_EQ(default_max_oracle_rank(), 14u);
}
