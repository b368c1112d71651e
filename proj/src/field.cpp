#include "cartierlab/field.hpp"

#include <array>
#include <ostream>

namespace cartierlab {

namespace {

std::uint64_t powmod128(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod128(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

void require_prime_modulus(std::uint64_t p) {
  thread_local std::array<std::uint64_t, 4> cache = {0, 0, 0, 0};
  for (std::uint64_t c : cache) {
    if (c == p) return;
  }
  if (p < 2 || !is_prime(p)) {
    throw Error("modulus " + std::to_string(p) + " is not prime");
  }
  for (int i = 3; i > 0; --i) cache[i] = cache[i - 1];
  cache[0] = p;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid; p prime and a != 0 mod p.
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) { return powmod128(a, e, p); }

Fp Fp::pow(std::int64_t e) const {
  if (e >= 0) return raw(powmod(v_, static_cast<std::uint64_t>(e), p_), p_);
  return inv().pow(-e);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

}  // namespace cartierlab
