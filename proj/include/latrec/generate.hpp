#pragma once

#include <random>
#include <string>

#include "latrec/lattice.hpp"

namespace latrec {

using Rng = std::mt19937_64;
inline constexpr const char* kRngAlgorithm = "mt19937_64";

enum class LatticeKind { UniformInteger, QaryLike };
const char* kind_name(LatticeKind k);
LatticeKind parse_kind(const std::string& s);

// Uniform in [0, bound) from 64-bit draws with rejection; bound > 0.
Integer uniform_below(Rng& rng, const Integer& bound);
// Uniform in [lo, hi].
long uniform_between(Rng& rng, long lo, long hi);

// uniform-integer: square basis, entries uniform in [-(2^bits - 1), 2^bits - 1],
// redrawn until full rank.
// qary-like: with h = floor(n/2) and q = 2^bits, rows q·e_i (i < h) followed by
// (a_i, e_i) with a_i uniform mod q; det = q^h.
Lattice random_lattice(std::size_t rank, unsigned bits, LatticeKind kind, Rng& rng);

// Rank-ell primitive sublattice from small random coefficients.
Sublattice random_primitive_sublattice(const Lattice& l, std::size_t ell, Rng& rng);

}  // namespace latrec
