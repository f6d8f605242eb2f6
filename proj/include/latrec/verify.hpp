#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include <json.hpp>

#include "latrec/generate.hpp"
#include "latrec/oracle.hpp"
#include "latrec/planner.hpp"

namespace latrec {

struct PropertyReport {
  std::string suite;
  std::string property;
  std::size_t cases = 0;
  std::size_t failures = 0;
  nlohmann::json counterexample;  // first failing case
  bool pass() const { return failures == 0 && cases > 0; }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::vector<std::size_t> sizes;  // empty: suite default
  std::uint64_t seed = 1;
  std::size_t cases = 0;  // 0: suite default
};

const std::vector<std::string>& suite_names();
std::vector<PropertyReport> run_suite(const std::string& suite, const VerifyOptions& opt);

// Shortest vector by exhaustive search over the coefficient box |x_i| <= |b_1|·|d_i|
// (d_i the dual basis) of an LLL-reduced basis; norm only.
Rational brute_force_min_norm_sq(const Lattice& l);

// All bounds reachable by reduction trees of the planner template, with the
// full budget set; memoized on (n, ell, budget) but never pruned.
class TreeEnumerator {
 public:
  TreeEnumerator(bool variable, std::size_t k, CostModel cost = {}) : variable_(variable), k_(k), cost_(cost) {}
  const std::set<long double>& all(std::size_t n, std::size_t ell, std::uint64_t budget);
  long double best(std::size_t n, std::size_t ell, std::uint64_t budget) { return *all(n, ell, budget).begin(); }

 private:
  std::set<long double> direct(std::size_t n, std::size_t ell, std::uint64_t budget);
  bool variable_;
  std::size_t k_;
  CostModel cost_;
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::set<long double>> memo_;
};

// Lattice with LLL-visible gaps: rows of a random basis scaled by 2^(s_i), s_i increasing.
Lattice skewed_lattice(std::size_t n, unsigned max_step, Rng& rng);
// Lower-triangular LLL-reduced basis whose Gram-Schmidt norms shrink by a factor in
// [0.72, 0.9] per step (|mu| <= 1/2, mu_{i,i-1} = 1/2).
Lattice descending_lattice(std::size_t n, unsigned top_bits, Rng& rng);

}  // namespace latrec
