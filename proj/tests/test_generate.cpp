#include <gtest/gtest.h>

#include "latrec/errors.hpp"
#include "latrec/generate.hpp"

using namespace latrec;

TEST(Generate, OneBitEntries) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    Lattice l = random_lattice(2, 1, LatticeKind::UniformInteger, rng);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t c = 0; c < 2; ++c) {
        EXPECT_GE(l.basis(i, c), -1);
        EXPECT_LE(l.basis(i, c), 1);
      }
    EXPECT_NE(l.det_sq(), 0);
  }
}

TEST(Generate, DeterministicPerSeed) {
  Rng a(77), b(77), c(78);
  Lattice la = random_lattice(6, 10, LatticeKind::UniformInteger, a);
  Lattice lb = random_lattice(6, 10, LatticeKind::UniformInteger, b);
  Lattice lc = random_lattice(6, 10, LatticeKind::UniformInteger, c);
  EXPECT_EQ(la.basis, lb.basis);
  EXPECT_NE(la.basis, lc.basis);
}

TEST(Generate, QaryDeterminant) {
  Rng rng(5);
  for (std::size_t n = 2; n <= 9; ++n) {
    Lattice l = random_lattice(n, 7, LatticeKind::QaryLike, rng);
    Rational q = 128;
    Rational want = 1;
    for (std::size_t i = 0; i < 2 * (n / 2); ++i) want *= q;
    EXPECT_EQ(l.det_sq(), want);
  }
}

TEST(Generate, UniformBelowStaysInRange) {
  Rng rng(3);
  Integer bound = 1000003;
  for (int t = 0; t < 1000; ++t) {
    Integer x = uniform_below(rng, bound);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, bound);
  }
}

TEST(Generate, KindNames) {
  EXPECT_EQ(parse_kind(kind_name(LatticeKind::QaryLike)), LatticeKind::QaryLike);
  EXPECT_EQ(parse_kind(kind_name(LatticeKind::UniformInteger)), LatticeKind::UniformInteger);
  EXPECT_THROW(parse_kind("gaussian"), Error);
}

TEST(Generate, PrimitiveSublattice) {
  Rng rng(8);
  Lattice l = random_lattice(5, 4, LatticeKind::UniformInteger, rng);
  for (std::size_t ell = 1; ell <= 5; ++ell) {
    Sublattice s = random_primitive_sublattice(l, ell, rng);
    EXPECT_EQ(s.rank(), ell);
    EXPECT_TRUE(is_primitive(s));
  }
}
