#ifndef CARTIERLAB_POLY_HPP
#define CARTIERLAB_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

#include "cartierlab/field.hpp"

namespace cartierlab {

// Sparse polynomial over F_p. Canonical form: no stored zero coefficients,
// all exponents >= 0. The zero polynomial has empty term map and degree()
// returns nullopt (the "minus infinity" marker).
class Poly {
 public:
  explicit Poly(std::uint64_t p);
  explicit Poly(const Fp& constant);
  static Poly monomial(const Fp& coeff, std::int64_t exp);
  static Poly variable(std::uint64_t p);  // x

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  std::optional<std::int64_t> degree() const;
  std::int64_t degree_or(std::int64_t if_zero) const;
  Fp coeff(std::int64_t e) const;
  Fp leading_coeff() const;
  const std::map<std::int64_t, std::uint64_t>& terms() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Fp& s) const;
  Poly pow(std::uint64_t k) const;
  Poly monic() const;
  Poly derivative() const;
  Fp eval(const Fp& x) const;
  Poly shifted(const Fp& c) const;  // P(x + c)

  void add_term(const Fp& coeff, std::int64_t exp);

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(const Poly& a, const Poly& b);  // monic

  bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  std::uint64_t p_;
  std::map<std::int64_t, std::uint64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace cartierlab

#endif
