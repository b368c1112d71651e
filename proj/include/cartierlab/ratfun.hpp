#ifndef CARTIERLAB_RATFUN_HPP
#define CARTIERLAB_RATFUN_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "cartierlab/poly.hpp"

namespace cartierlab {

// Quotient of polynomials over F_p in canonical form: gcd(num, den) = 1 and
// den monic, so equality is syntactic. Zero is 0/1.
class RatFun {
 public:
  explicit RatFun(std::uint64_t p);
  explicit RatFun(const Poly& n);
  RatFun(const Poly& n, const Poly& d);
  static RatFun constant(const Fp& c);
  static RatFun monomial(const Fp& c, std::int64_t e);  // c * x^e, e may be negative

  std::uint64_t modulus() const { return num_.modulus(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  bool is_constant() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator*(const Fp& s) const;
  RatFun operator/(const RatFun& o) const;
  RatFun pow(std::int64_t e) const;
  RatFun derivative() const;

  // Order of vanishing at x = c (negative at a pole). The zero function
  // returns a large sentinel.
  std::int64_t ord_at(const Fp& c) const;
  std::int64_t ord_at_infinity() const;  // deg den - deg num
  static constexpr std::int64_t kOrdInfinite = INT64_MAX / 4;

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

// Principal part at a single F_p-rational point: sum over k >= 1 of
// coeffs[k] * (x - center)^{-k}. Pole order = largest stored key.
struct PolarPart {
  Fp center;
  std::map<std::int64_t, Fp> coeffs;

  std::int64_t order() const;
  RatFun to_ratfun(std::uint64_t p) const;
};

struct PartialFractions {
  Poly polynomial_part;
  std::vector<PolarPart> parts;  // sorted by center residue

  RatFun recombine() const;
};

// Exact decomposition h = polynomial_part + sum of principal parts; requires
// every irreducible factor of the denominator to be linear over F_p, else
// NonSplitDenominator.
PartialFractions partial_fractions(const RatFun& h);

// Unique components h_0..h_{p-1} with h = sum_i h_i(x)^p * x^i. Uses
// h = a * b^{p-1} / b^p and b(x)^p = b(x^p) over F_p.
std::vector<RatFun> p_power_decompose(const RatFun& h);

}  // namespace cartierlab

#endif
