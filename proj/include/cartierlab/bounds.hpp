#ifndef CARTIERLAB_BOUNDS_HPP
#define CARTIERLAB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartierlab/ascover.hpp"

namespace cartierlab {

struct SigmaParams {
  std::uint64_t p;
  std::int64_t d;  // positive, coprime to p
  std::int64_t i;  // in [0, p-1]
  std::int64_t n;  // >= 1

  SigmaParams(std::uint64_t p_in, std::int64_t d_in, std::int64_t i_in, std::int64_t n_in);
};

// Number of integers 0 < l <= ceil(i*d/p) with l != 1 mod p^n whose first n
// p-adic digits of (1-l)/d sum to at most p-1-i. Digits are the base-p
// digits of (1-l)*d^{-1} mod p^n.
std::int64_t sigma_p(const SigmaParams& params);
std::int64_t sigma_p(std::uint64_t p, std::int64_t d, std::int64_t i, std::int64_t n);

// a_Y^n <= p*a_X^n + sum_Q sum_{i=1}^{p-1} floor(i d_Q/p) - floor(i d_Q/p^{n+1})
//          - sigma_p(d_Q, i, n).
std::int64_t upper_bound(std::uint64_t p, const RamificationData& data, std::int64_t a_x_n, std::int64_t n);

// max over 0 <= j <= p-1 of
// sum_Q sum_{i=j}^{p-1} floor(i d_Q/p) - floor(i d_Q/p - (1 - p^{-n}) j d_Q/p),
// with the floor arguments evaluated in exact integer arithmetic.
std::int64_t lower_bound_closed(std::uint64_t p, const RamificationData& data, std::int64_t n);

// Iterative sharpening: kernel dimensions grow strictly until they reach
// g - s, so L(n) = max(L_closed(n), min(g - s, L(n-1) + 1)).
std::int64_t lower_bound_combined(std::uint64_t p, const RamificationData& data, std::int64_t n,
                                  std::int64_t g_minus_s);

// Exact value for p = 2 with a_X^n = 0: sum_Q (d_Q-1)/2 - floor(d_Q/2^{n+1}).
std::int64_t cor_p2_value(const RamificationData& data, std::int64_t n);

struct BoundsRow {
  std::int64_t n;
  std::int64_t L_closed;
  std::int64_t L_combined;
  std::int64_t U_closed;
  std::int64_t U_capped;
  std::optional<std::int64_t> a_exact;
};

struct BoundsTable {
  std::uint64_t p;
  RamificationData data;
  std::vector<std::int64_t> a_x_profile;
  std::int64_t g_minus_s;
  std::vector<BoundsRow> rows;
};

// Per-n records for n = 1..n_max. a_x_profile entries are a_X^n (empty means
// all zero, the projective-line case); a shorter profile is padded with its
// last entry. When an exact profile is attached, every attached a^n must lie
// in [L_combined, U_capped] or the table aborts with BoundViolation.
BoundsTable bounds_table(std::uint64_t p, const RamificationData& data,
                         const std::vector<std::int64_t>& a_x_profile, std::int64_t n_max,
                         std::int64_t g_x = 0, std::int64_t s_x = 0,
                         const std::optional<std::vector<std::int64_t>>& a_exact = std::nullopt);

}  // namespace cartierlab

#endif
