#include "latrec/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "latrec/errors.hpp"
#include "latrec/lll.hpp"

namespace latrec {

namespace {

long double bump_up(long double x) {
  // Covers a few ulps of libm error in the inputs.
  long double r = x + std::fabs(x) * 0x1p-52L + 0x1p-60L;
  return std::nextafter(r, HUGE_VALL);
}

class Enumerator {
 public:
  Enumerator(const GsoData& g, Rational radius) : g_(g), n_(g.gs_norms_sq.size()), x_(n_), best_(std::move(radius)) {}

  void run() { search(n_ - 1, Rational(0)); }

  const Rational& best() const { return best_; }
  const std::vector<IntVector>& candidates() const { return cands_; }

 private:
  void search(std::size_t i, const Rational& rho_above) {
    const Rational& r = g_.gs_norms_sq[i];
    bool zero_above = sgn(rho_above) == 0;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (sgn(x_[j]) != 0) c -= Rational(x_[j]) * g_.mu(j, i);
    auto visit = [&](const Integer& x) {
      Rational diff = Rational(x) - c;
      Rational rho = rho_above + diff * diff * r;
      if (rho > best_) return false;
      x_[i] = x;
      if (i > 0) {
        search(i - 1, rho);
      } else if (sgn(rho) != 0) {
        record(rho);
      }
      return true;
    };
    if (zero_above) {
      // Only the half-space with first nonzero coordinate (from the top) positive.
      for (Integer x = (i == 0 ? 1 : 0);; ++x)
        if (!visit(x)) break;
    } else {
      Integer x0 = round_q(c);
      for (Integer x = x0;; ++x)
        if (!visit(x)) break;
      for (Integer x = x0 - 1;; --x)
        if (!visit(x)) break;
    }
    x_[i] = 0;
  }

  void record(const Rational& rho) {
    if (rho < best_) {
      best_ = rho;
      cands_.clear();
    }
    cands_.push_back(x_);
  }

  const GsoData& g_;
  std::size_t n_;
  IntVector x_;
  Rational best_;
  std::vector<IntVector> cands_;
};

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

long double log2_blichfeldt_upper(int k) {
  long double kk = k;
  long double v = 1.0L - std::log2(3.14159265358979323846264338327950288L) +
                  (2.0L / kk) * std::lgamma(2.0L + kk / 2.0L) / std::log(2.0L);
  return bump_up(v);
}

long double log2_hermite_upper(int k) {
  if (k < 1) fail(ErrorKind::InvalidParams, "Hermite constant needs k >= 1");
  long double log2_3 = std::log2(3.0L);
  switch (k) {
    case 1: return 0.0L;
    case 2: return bump_up(1.0L - 0.5L * log2_3);
    case 3: return bump_up(1.0L / 3.0L);
    case 4: return bump_up(0.5L);
    case 5: return bump_up(0.6L);
    case 6: return bump_up(1.0L - log2_3 / 6.0L);
    case 7: return bump_up(6.0L / 7.0L);
    case 8: return 1.0L;
    default: return log2_blichfeldt_upper(k);
  }
}

std::optional<Rational> hermite_power_exact(int k) {
  switch (k) {
    case 1: return Rational(1);
    case 2: return Rational(4, 3);
    case 3: return Rational(2);
    case 4: return Rational(4);
    case 5: return Rational(8);
    case 6: return Rational(64, 3);
    case 7: return Rational(64);
    case 8: return Rational(256);
    default: return std::nullopt;
  }
}

HermiteBound hermite_bound(int k) {
  HermiteBound h;
  h.k = k;
  long double v = log2_hermite_upper(k);
  double d = static_cast<double>(v);
  if (static_cast<long double>(d) < v) d = std::nextafter(d, HUGE_VAL);
  h.log2_delta_k = d;
  h.source = k <= 8 ? HermiteBound::Source::ExactTable : HermiteBound::Source::Blichfeldt;
  return h;
}

std::size_t default_max_oracle_rank() {
  if (const char* s = std::getenv("LATREC_MAX_ORACLE_RANK")) {
    try {
      long v = std::stol(s);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 14;
}

SvpResult svp_exact(const Lattice& l, std::size_t max_rank) {
  std::size_t n = l.rank();
  if (n > max_rank)
    fail(ErrorKind::RankTooLarge, "rank " + std::to_string(n) + " exceeds oracle maximum " + std::to_string(max_rank));
  if (n == 0) fail(ErrorKind::InvalidRank, "empty lattice");
  LllBasis r = lll_reduce(l);
  Rational radius = dot(r.basis.row(0), r.basis.row(0));
  Enumerator e(r.gso, radius);
  e.run();
  SvpResult out;
  out.norm_sq = e.best();
  bool have = false;
  for (const auto& x : e.candidates()) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(x[i]) != 0) mpz_addmul(v[j].get_mpz_t(), x[i].get_mpz_t(), r.transform(i, j).get_mpz_t());
    normalize_sign(v);
    if (!have || v < out.vector) {
      out.vector = std::move(v);
      have = true;
    }
  }
  if (!have) fail(ErrorKind::InvariantViolation, "enumeration found no vector within the LLL radius");
  return out;
}

Sublattice hsvp_oracle(const Lattice& l, std::size_t max_rank) {
  SvpResult s = svp_exact(l, max_rank);
  IntMatrix z(1, l.rank());
  Integer g = 0;
  for (const auto& x : s.vector) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (std::size_t j = 0; j < l.rank(); ++j) z(0, j) = s.vector[j] / g;
  return Sublattice{l, z};
}

}  // namespace latrec
