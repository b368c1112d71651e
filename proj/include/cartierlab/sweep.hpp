#ifndef CARTIERLAB_SWEEP_HPP
#define CARTIERLAB_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "cartierlab/ratfun.hpp"

namespace cartierlab {

struct SweepOptions {
  std::uint64_t p = 3;
  enum class Mode { FamilyPole, Random } mode = Mode::Random;
  // FamilyPole: all curves y^p - y = x^{-d} + c_{d-1} x^{-(d-1)} + ... + c_1 x^{-1}
  // with the lower coefficients ranging over F_p (p^{d-1} curves).
  std::int64_t family_d = 4;
  // Random: seeded reduced covers with total break sum <= max_total_break.
  std::int64_t random_count = 100;
  std::int64_t max_total_break = 12;
  bool allow_polynomial_shape = true;
  std::uint64_t seed = 0;
  int jobs = 0;        // 0: CARTIER_LAB_JOBS env or hardware concurrency
  std::int64_t n_max = 0;  // 0: up to the per-curve stabilization point
};

// One CSV row per curve, in input order regardless of parallelism; per-row
// engine errors are recorded in the error column and the run continues
// (except BoundViolation, which aborts the whole sweep). A work estimate is
// printed to diag before the run starts.
void run_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& diag);

// Deterministic generator of reduced curve equations: pole orders coprime to
// p, no term of p-divisible order, zero constant term.
RatFun random_reduced_curve(std::mt19937_64& rng, std::uint64_t p, std::int64_t max_total_break,
                            bool allow_polynomial);

int default_jobs();

}  // namespace cartierlab

#endif
