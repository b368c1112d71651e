#ifndef CARTIERLAB_SERIES_HPP
#define CARTIERLAB_SERIES_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "cartierlab/ratfun.hpp"

namespace cartierlab {

// Truncated Laurent series over F_p in a named local uniformizer. A value
// represents sum of the stored terms plus O(var^known_end). Precision is
// tracked pessimistically: each operation's window is what the operand
// windows provably support, never more.
class Series {
 public:
  Series(std::string var, std::uint64_t p, std::int64_t known_end);
  static Series from_poly(const Poly& f, const std::string& var, std::int64_t known_end);
  static Series constant(const Fp& c, const std::string& var, std::int64_t known_end);
  static Series monomial(const Fp& c, std::int64_t e, const std::string& var, std::int64_t known_end);
  // Expansion of h(1/u) in the uniformizer u at infinity.
  static Series from_ratfun_at_infinity(const RatFun& h, const std::string& var, std::int64_t known_end);

  std::uint64_t modulus() const { return p_; }
  const std::string& var() const { return var_; }
  std::int64_t known_end() const { return end_; }
  // First nonzero exponent; nullopt when identically zero to the window.
  std::optional<std::int64_t> valuation() const;
  bool is_zero_to_window() const { return c_.empty(); }
  std::int64_t precision() const;
  bool knows(std::int64_t e) const { return e < end_; }
  Fp coeff(std::int64_t e) const;
  const std::map<std::int64_t, std::uint64_t>& terms() const { return c_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator*(const Fp& s) const;
  Series inverse() const;
  Series pow(std::uint64_t k) const;
  // Exact Frobenius: (sum c_e u^e)^p = sum c_e u^{pe} in characteristic p,
  // with the window scaled accordingly.
  Series frob_pow_p() const;
  Series shifted_exponents(std::int64_t k) const;
  Series truncated(std::int64_t new_end) const;

  bool operator==(const Series& o) const;

 private:
  void set(std::int64_t e, const Fp& v);
  void check_compat(const Series& o) const;

  std::string var_;
  std::uint64_t p_;
  std::map<std::int64_t, std::uint64_t> c_;
  std::int64_t end_;
};

std::ostream& operator<<(std::ostream& os, const Series& s);

// Solves y^p - y = f for y = zeta + (higher order) by the fixed-point
// iteration y <- y + (y^p - y - f); each pass multiplies the residual
// valuation by p. Requires f to vanish (valuation >= 1) and to be known to
// the requested precision, else PrecisionExhausted.
Series solve_artin_schreier_series(const Series& f, const Fp& zeta, std::int64_t precision);

}  // namespace cartierlab

#endif
