#pragma once

#include <initializer_list>

#include "latrec/lattice.hpp"

namespace latrec::test {

inline RatMatrix rm(std::initializer_list<std::initializer_list<Rational>> rows) {
  RatMatrix m;
  for (const auto& r : rows) m.append_row(std::vector<Rational>(r));
  return m;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    std::vector<Integer> v;
    for (long x : r) v.emplace_back(x);
    m.append_row(v);
  }
  return m;
}

inline Lattice lat(std::initializer_list<std::initializer_list<Rational>> rows) { return Lattice(rm(rows)); }

inline Rational q(long p, long d) { Rational r(p, d); r.canonicalize(); return r; }

}  // namespace latrec::test
