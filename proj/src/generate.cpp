#include "latrec/generate.hpp"

#include "latrec/errors.hpp"
#include "latrec/intmat.hpp"

namespace latrec {

const char* kind_name(LatticeKind k) {
  return k == LatticeKind::UniformInteger ? "uniform-integer" : "qary-like";
}

LatticeKind parse_kind(const std::string& s) {
  if (s == "uniform-integer") return LatticeKind::UniformInteger;
  if (s == "qary-like") return LatticeKind::QaryLike;
  fail(ErrorKind::InvalidParams, "unknown lattice kind '" + s + "'");
}

Integer uniform_below(Rng& rng, const Integer& bound) {
  if (bound <= 0) fail(ErrorKind::InvalidParams, "uniform_below needs a positive bound");
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  std::size_t extra = words * 64 - bits;
  for (;;) {
    Integer x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = rng();
      if (w == 0 && extra > 0) v >>= extra;
      x <<= 64;
      x += Integer(static_cast<unsigned long>(v >> 32)) * Integer(1UL << 32) + Integer(static_cast<unsigned long>(v & 0xffffffffUL));
    }
    if (x < bound) return x;
  }
}

long uniform_between(Rng& rng, long lo, long hi) {
  Integer span = Integer(hi) - Integer(lo) + 1;
  Integer x = uniform_below(rng, span) + lo;
  return x.get_si();
}

Lattice random_lattice(std::size_t rank, unsigned bits, LatticeKind kind, Rng& rng) {
  if (rank < 1 || bits < 1) fail(ErrorKind::InvalidParams, "rank and bits must be at least 1");
  Integer top = (Integer(1) << bits) - 1;
  RatMatrix b(rank, rank);
  if (kind == LatticeKind::UniformInteger) {
    for (;;) {
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) b(i, j) = Rational(uniform_below(rng, 2 * top + 1) - top);
      if (matrix_rank(b) == rank) return Lattice(std::move(b));
    }
  }
  Integer q = Integer(1) << bits;
  std::size_t h = rank / 2;
  for (std::size_t i = 0; i < h; ++i) b(i, i) = Rational(q);
  for (std::size_t i = h; i < rank; ++i) {
    for (std::size_t j = 0; j < h; ++j) b(i, j) = Rational(uniform_below(rng, q));
    b(i, i) = 1;
  }
  return Lattice(std::move(b));
}

Sublattice random_primitive_sublattice(const Lattice& l, std::size_t ell, Rng& rng) {
  std::size_t n = l.rank();
  if (ell < 1 || ell > n) fail(ErrorKind::InvalidRank, "ell must lie in [1, n]");
  for (;;) {
    IntMatrix z(ell, n);
    for (std::size_t i = 0; i < ell; ++i)
      for (std::size_t j = 0; j < n; ++j) z(i, j) = uniform_between(rng, -3, 3);
    if (matrix_rank(to_rational(z)) != ell) continue;
    return Sublattice{l, rows_primitive(z) ? z : saturate_rows(z)};
  }
}

}  // namespace latrec
