#include "latrec/bounds.hpp"

#include <cmath>

namespace latrec {

long double up(long double x) {
  long double r = x + std::fabs(x) * 0x1p-60L;
  return std::nextafter(r, HUGE_VALL);
}

long double add_up(long double a, long double b) { return up(a + b); }
long double mul_up(long double a, long double b) { return up(a * b); }

Rational pow2_upper(long double x) {
  long double f = std::floor(x);
  long double frac = x - f;  // exact for |x| < 2^63
  long double m = up(up(std::exp2(frac)));
  int e = 0;
  long double mant = std::frexp(m, &e);  // m = mant·2^e, mant in [0.5, 1)
  // 64-bit mantissa as an exact integer, rounded up.
  long double scaled = std::ceil(std::ldexp(mant, 64));
  Integer num;
  mpz_set_d(num.get_mpz_t(), 0);
  {
    unsigned long long hi = static_cast<unsigned long long>(std::ldexp(scaled, -32));
    long double rest = scaled - std::ldexp(static_cast<long double>(hi), 32);
    unsigned long long lo = static_cast<unsigned long long>(rest);
    num = Integer(static_cast<unsigned long>(hi));
    num <<= 32;
    num += Integer(static_cast<unsigned long>(lo));
  }
  long exp2 = static_cast<long>(f) + e - 64;
  Rational r(num);
  if (exp2 >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp2));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp2));
  }
  return r;
}

bool gamma_within_log2(const DensityRatio& r, long double log2_gamma) {
  long double x = mul_up(2.0L * static_cast<long double>(r.n), log2_gamma);
  return r.within_nth_power(pow2_upper(x));
}

}  // namespace latrec
