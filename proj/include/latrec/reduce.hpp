#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "latrec/lattice.hpp"

namespace latrec {

enum class Mode { Hsvp2Hsvp, Dsp2Dsp, Dsp2Hsvp };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct ReductionParams {
  Mode mode = Mode::Hsvp2Hsvp;
  std::size_t k = 2;
  std::size_t ell = 1;
  int tau = 0;
  std::size_t max_oracle_rank = 14;
  bool lll_each_node = true;
  bool monitor_beta = false;
  std::ostream* trace = nullptr;
};

struct RunStats {
  std::uint64_t oracle_calls = 0;
  std::uint64_t lll_calls = 0;
  std::uint64_t duality_steps = 0;
  std::uint64_t nodes = 0;
  std::size_t max_bitlength_seen = 0;
  std::size_t depth_reached = 0;
  std::size_t max_path_recursions = 0;
  std::uint64_t beta_checks = 0;
};

enum class FormulaId { Sec2, Thm4, Thm5 };

struct GuaranteeBound {
  long double log2_gamma_bound = 0;  // rounded up
  FormulaId formula_id = FormulaId::Sec2;
  std::size_t n = 0, ell = 0, k = 0;
  int tau = 0;
};

GuaranteeBound theorem_bound(FormulaId id, std::size_t n, std::size_t ell, int tau, std::size_t k);
FormulaId formula_for(Mode m);

struct ReductionResult {
  Sublattice output;
  RunStats stats;
  GuaranteeBound bound;
  DensityRatio ratio;
  bool bound_ok = false;
};

void validate(const ReductionParams& p, std::size_t n);

ReductionResult hsvp_recursive(const Lattice& l, const ReductionParams& p);
ReductionResult dsp_to_dsp(const Lattice& l, const ReductionParams& p);
ReductionResult dsp_to_hsvp(const Lattice& l, const ReductionParams& p);
ReductionResult run_reduction(const Lattice& l, const ReductionParams& p);

// Runs the same recursion with lattices replaced by their ranks: counts and
// structural assertions only.
RunStats simulate_reduction(const ReductionParams& p, std::size_t n);

// Closed form C(n-k+tau-1, tau-1) for the HSVP recursion (0 when tau = 0, 1 when n = k).
std::uint64_t hsvp_call_count(std::size_t n, std::size_t k, int tau);

}  // namespace latrec
