#ifndef CARTIERLAB_FIELD_HPP
#define CARTIERLAB_FIELD_HPP

#include <cstdint>
#include <iosfwd>

#include "cartierlab/errors.hpp"

namespace cartierlab {

bool is_prime(std::uint64_t n);

// Validates p once and caches the last few accepted moduli.
void require_prime_modulus(std::uint64_t p);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

// Element of the prime field F_p, canonical residue in [0, p).
class Fp {
 public:
  Fp(std::int64_t value, std::uint64_t p) : p_(p) {
    require_prime_modulus(p);
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }

  static Fp zero(std::uint64_t p) { return Fp(0, p); }
  static Fp one(std::uint64_t p) { return Fp(1, p); }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const {
    check_same(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return raw(s, p_);
  }
  Fp operator-(const Fp& o) const {
    check_same(o);
    std::uint64_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return raw(s, p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    check_same(o);
    return raw(mulmod(v_, o.v_, p_), p_);
  }
  Fp inv() const {
    if (v_ == 0) throw Error("division by zero in F_p");
    return raw(invmod(v_, p_), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp pow(std::int64_t e) const;

  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
  // Order by residue; used for deterministic container ordering only.
  bool operator<(const Fp& o) const { return v_ < o.v_; }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp x(p);
    x.v_ = v;
    return x;
  }
  explicit Fp(std::uint64_t p) : v_(0), p_(p) {}
  void check_same(const Fp& o) const {
    if (p_ != o.p_) throw Error("mixed moduli in F_p arithmetic");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

}  // namespace cartierlab

#endif
