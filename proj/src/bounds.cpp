#include "cartierlab/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace cartierlab {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

// p^e, or nullopt when it does not fit comfortably in 128 bits.
std::optional<u128> pow_u128(std::uint64_t p, std::int64_t e) {
  const u128 limit = (static_cast<u128>(1) << 120);
  u128 r = 1;
  for (std::int64_t t = 0; t < e; ++t) {
    if (r > limit / p) return std::nullopt;
    r *= p;
  }
  return r;
}

u128 inv_mod_u128(u128 a, u128 m) {
  i128 t = 0, newt = 1;
  i128 r = static_cast<i128>(m), newr = static_cast<i128>(a % m);
  while (newr != 0) {
    i128 q = r / newr;
    i128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("not invertible in sigma_p digit computation");
  if (t < 0) t += static_cast<i128>(m);
  return static_cast<u128>(t);
}

// Digit sum of the first n base-p digits of the p-adic number (1-l)/d,
// stopping early once the sum exceeds cap. This is the long-division route;
// it agrees with the base-p digits of (1-l)*d^{-1} mod p^n.
std::int64_t digit_sum_recurrence(std::uint64_t p, std::int64_t d, std::int64_t l, std::int64_t n,
                                  std::int64_t cap) {
  std::int64_t ip = static_cast<std::int64_t>(p);
  std::int64_t dinv = static_cast<std::int64_t>(invmod(static_cast<std::uint64_t>(d % ip), p));
  std::int64_t r = 1 - l;
  std::int64_t sum = 0;
  for (std::int64_t t = 0; t < n; ++t) {
    std::int64_t c = ((r % ip) * dinv) % ip;
    if (c < 0) c += ip;
    sum += c;
    if (sum > cap) return sum;
    r = (r - c * d) / ip;
  }
  return sum;
}

}  // namespace

SigmaParams::SigmaParams(std::uint64_t p_in, std::int64_t d_in, std::int64_t i_in, std::int64_t n_in)
    : p(p_in), d(d_in), i(i_in), n(n_in) {
  require_prime_modulus(p);
  if (d < 1 || std::gcd(d, static_cast<std::int64_t>(p)) != 1) {
    throw Error("sigma_p needs d >= 1 coprime to p");
  }
  if (i < 0 || i >= static_cast<std::int64_t>(p)) throw Error("sigma_p needs 0 <= i <= p-1");
  if (n < 1) throw Error("sigma_p needs n >= 1");
}

std::int64_t sigma_p(const SigmaParams& params) {
  std::int64_t ip = static_cast<std::int64_t>(params.p);
  std::int64_t bound = (params.i * params.d + ip - 1) / ip;  // ceil(i*d/p)
  std::int64_t cap = ip - 1 - params.i;
  std::int64_t count = 0;
  std::optional<u128> pn = pow_u128(params.p, params.n);
  if (pn) {
    u128 m = *pn;
    u128 dinv = inv_mod_u128(static_cast<u128>(params.d) % m, m);
    for (std::int64_t l = 1; l <= bound; ++l) {
      u128 lm1 = static_cast<u128>(l - 1) % m;
      if (lm1 == 0) continue;  // l = 1 mod p^n
      u128 x = ((m - lm1) * dinv) % m;  // (1-l)*d^{-1} mod p^n
      std::int64_t sum = 0;
      u128 rest = x;
      for (std::int64_t t = 0; t < params.n && sum <= cap; ++t) {
        sum += static_cast<std::int64_t>(rest % params.p);
        rest /= params.p;
      }
      if (sum <= cap) ++count;
    }
  } else {
    // p^n is astronomically larger than any l in range, so only l = 1 is
    // congruent to 1 mod p^n.
    for (std::int64_t l = 2; l <= bound; ++l) {
      if (digit_sum_recurrence(params.p, params.d, l, params.n, cap) <= cap) ++count;
    }
  }
  return count;
}

std::int64_t sigma_p(std::uint64_t p, std::int64_t d, std::int64_t i, std::int64_t n) {
  return sigma_p(SigmaParams(p, d, i, n));
}

namespace {

// floor(i*d / p^{n+1}) without overflow.
std::int64_t floor_div_ppow(std::int64_t numerator, std::uint64_t p, std::int64_t exp) {
  std::optional<u128> pe = pow_u128(p, exp);
  if (!pe) return 0;
  return static_cast<std::int64_t>(static_cast<u128>(numerator) / *pe);
}

}  // namespace

std::int64_t upper_bound(std::uint64_t p, const RamificationData& data, std::int64_t a_x_n,
                         std::int64_t n) {
  if (data.p != p) throw Error("modulus mismatch in upper_bound");
  if (a_x_n < 0 || n < 1) throw Error("upper_bound needs a_X^n >= 0 and n >= 1");
  std::int64_t ip = static_cast<std::int64_t>(p);
  std::int64_t total = ip * a_x_n;
  for (std::int64_t d : data.d) {
    for (std::int64_t i = 1; i < ip; ++i) {
      total += (i * d) / ip - floor_div_ppow(i * d, p, n + 1) - sigma_p(p, d, i, n);
    }
  }
  return total;
}

std::int64_t lower_bound_closed(std::uint64_t p, const RamificationData& data, std::int64_t n) {
  if (data.p != p) throw Error("modulus mismatch in lower_bound_closed");
  if (n < 1) throw Error("lower_bound_closed needs n >= 1");
  std::int64_t ip = static_cast<std::int64_t>(p);
  std::optional<u128> pn = pow_u128(p, n);
  std::optional<u128> pn1 = pow_u128(p, n + 1);
  std::int64_t best = 0;  // j = 0 contributes an empty improvement
  for (std::int64_t j = 0; j < ip; ++j) {
    std::int64_t sum = 0;
    for (std::int64_t d : data.d) {
      for (std::int64_t i = j; i < ip; ++i) {
        // floor(i d/p - (1 - p^{-n}) j d/p) = floor(((i-j) d p^n + j d) / p^{n+1})
        std::int64_t inner;
        if (pn && pn1) {
          u128 numer = static_cast<u128>((i - j) * d) * *pn + static_cast<u128>(j * d);
          inner = static_cast<std::int64_t>(numer / *pn1);
        } else {
          // p^n far exceeds j*d, so the correction term j*d/p^n cannot move
          // the floor: floor(((i-j)d + eps)/p) with 0 <= eps < 1.
          inner = ((i - j) * d) / ip;
        }
        sum += (i * d) / ip - inner;
      }
    }
    best = std::max(best, sum);
  }
  return best;
}

std::int64_t lower_bound_combined(std::uint64_t p, const RamificationData& data, std::int64_t n,
                                  std::int64_t g_minus_s) {
  if (n < 1) throw Error("lower_bound_combined needs n >= 1");
  std::int64_t comb = lower_bound_closed(p, data, 1);
  for (std::int64_t k = 2; k <= n; ++k) {
    comb = std::max(lower_bound_closed(p, data, k), std::min(g_minus_s, comb + 1));
  }
  return comb;
}

std::int64_t cor_p2_value(const RamificationData& data, std::int64_t n) {
  if (data.p != 2) throw Error("closed form requires p = 2");
  if (n < 1) throw Error("cor_p2_value needs n >= 1");
  std::int64_t total = 0;
  for (std::int64_t d : data.d) {
    total += (d - 1) / 2 - floor_div_ppow(d, 2, n + 1);
  }
  return total;
}

BoundsTable bounds_table(std::uint64_t p, const RamificationData& data,
                         const std::vector<std::int64_t>& a_x_profile, std::int64_t n_max,
                         std::int64_t g_x, std::int64_t s_x,
                         const std::optional<std::vector<std::int64_t>>& a_exact) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  std::int64_t gms = g_minus_s(data, g_x, s_x);
  BoundsTable table{p, data, a_x_profile, gms, {}};
  std::int64_t prev_comb = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t ax = 0;
    if (!a_x_profile.empty()) {
      std::size_t idx = std::min(static_cast<std::size_t>(n - 1), a_x_profile.size() - 1);
      ax = a_x_profile[idx];
    }
    BoundsRow row{n, 0, 0, 0, 0, std::nullopt};
    row.L_closed = lower_bound_closed(p, data, n);
    row.L_combined = n == 1 ? row.L_closed : std::max(row.L_closed, std::min(gms, prev_comb + 1));
    row.U_closed = upper_bound(p, data, ax, n);
    row.U_capped = std::min(row.U_closed, gms);
    if (row.L_combined > row.U_capped) {
      throw BoundViolation("lower bound " + std::to_string(row.L_combined) + " exceeds upper bound " +
                           std::to_string(row.U_capped) + " at n = " + std::to_string(n) +
                           "; inputs are inconsistent with any cover");
    }
    if (a_exact && static_cast<std::size_t>(n - 1) < a_exact->size()) {
      std::int64_t a = (*a_exact)[static_cast<std::size_t>(n - 1)];
      row.a_exact = a;
      if (a < row.L_combined || a > row.U_capped) {
        throw BoundViolation("exact kernel dimension " + std::to_string(a) + " escapes [" +
                             std::to_string(row.L_combined) + ", " + std::to_string(row.U_capped) +
                             "] at n = " + std::to_string(n));
      }
    }
    prev_comb = row.L_combined;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace cartierlab
