#include "cartierlab/series.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace cartierlab {

Series::Series(std::string var, std::uint64_t p, std::int64_t known_end)
    : var_(std::move(var)), p_(p), end_(known_end) {
  require_prime_modulus(p);
}

Series Series::from_poly(const Poly& f, const std::string& var, std::int64_t known_end) {
  Series s(var, f.modulus(), known_end);
  for (const auto& [e, v] : f.terms()) {
    if (e < known_end) s.c_[e] = v;
  }
  return s;
}

Series Series::constant(const Fp& c, const std::string& var, std::int64_t known_end) {
  Series s(var, c.modulus(), known_end);
  if (!c.is_zero() && known_end > 0) s.c_[0] = c.value();
  return s;
}

Series Series::monomial(const Fp& c, std::int64_t e, const std::string& var, std::int64_t known_end) {
  Series s(var, c.modulus(), known_end);
  if (!c.is_zero() && e < known_end) s.c_[e] = c.value();
  return s;
}

std::optional<std::int64_t> Series::valuation() const {
  if (c_.empty()) return std::nullopt;
  return c_.begin()->first;
}

std::int64_t Series::precision() const {
  if (c_.empty()) return 0;
  return end_ - c_.begin()->first;
}

Fp Series::coeff(std::int64_t e) const {
  if (e >= end_) {
    throw PrecisionExhausted("series coefficient at exponent " + std::to_string(e) +
                             " is outside the known window (end " + std::to_string(end_) + ")");
  }
  auto it = c_.find(e);
  return Fp(it == c_.end() ? 0 : static_cast<std::int64_t>(it->second), p_);
}

void Series::set(std::int64_t e, const Fp& v) {
  if (e >= end_) return;
  if (v.is_zero()) {
    c_.erase(e);
  } else {
    c_[e] = v.value();
  }
}

void Series::check_compat(const Series& o) const {
  if (p_ != o.p_ || var_ != o.var_) throw Error("incompatible series operands");
}

Series Series::operator+(const Series& o) const {
  check_compat(o);
  Series r(var_, p_, std::min(end_, o.end_));
  for (const auto& [e, v] : c_) {
    if (e < r.end_) r.c_[e] = v;
  }
  for (const auto& [e, v] : o.c_) {
    if (e >= r.end_) continue;
    r.set(e, r.coeff(e) + Fp(static_cast<std::int64_t>(v), p_));
  }
  return r;
}

Series Series::operator-() const {
  Series r(var_, p_, end_);
  for (const auto& [e, v] : c_) r.c_[e] = p_ - v;
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  check_compat(o);
  std::int64_t va = c_.empty() ? end_ : c_.begin()->first;
  std::int64_t vb = o.c_.empty() ? o.end_ : o.c_.begin()->first;
  std::int64_t new_end = std::min(end_ + vb, o.end_ + va);
  Series r(var_, p_, new_end);
  for (const auto& [e1, v1] : c_) {
    for (const auto& [e2, v2] : o.c_) {
      if (e1 + e2 >= new_end) continue;
      r.set(e1 + e2, r.coeff(e1 + e2) + Fp(static_cast<std::int64_t>(mulmod(v1, v2, p_)), p_));
    }
  }
  return r;
}

Series Series::operator*(const Fp& s) const {
  Series r(var_, p_, end_);
  if (s.is_zero()) return r;
  for (const auto& [e, v] : c_) r.c_[e] = mulmod(v, s.value(), p_);
  return r;
}

Series Series::inverse() const {
  if (c_.empty()) throw PrecisionExhausted("cannot invert a series with no known nonzero term");
  std::int64_t v = c_.begin()->first;
  std::int64_t len = end_ - v;  // known terms of the unit part
  // Unit part w, w_0 invertible; solve q * w = 1 term by term.
  std::vector<std::uint64_t> w(static_cast<std::size_t>(len), 0);
  for (const auto& [e, cv] : c_) w[static_cast<std::size_t>(e - v)] = cv;
  Fp w0inv = Fp(static_cast<std::int64_t>(w[0]), p_).inv();
  std::vector<Fp> q;
  q.reserve(static_cast<std::size_t>(len));
  for (std::int64_t t = 0; t < len; ++t) {
    Fp acc = t == 0 ? Fp::one(p_) : Fp::zero(p_);
    for (std::int64_t s = 0; s < t; ++s) {
      acc = acc - q[static_cast<std::size_t>(s)] * Fp(static_cast<std::int64_t>(w[static_cast<std::size_t>(t - s)]), p_);
    }
    q.push_back(acc * w0inv);
  }
  Series r(var_, p_, -v + len);
  for (std::int64_t t = 0; t < len; ++t) r.set(-v + t, q[static_cast<std::size_t>(t)]);
  return r;
}

Series Series::pow(std::uint64_t k) const {
  if (k == 0) return constant(Fp::one(p_), var_, end_);
  Series r = *this;
  for (std::uint64_t i = 1; i < k; ++i) r = r * *this;
  return r;
}

Series Series::frob_pow_p() const {
  Series r(var_, p_, end_ * static_cast<std::int64_t>(p_));
  for (const auto& [e, v] : c_) r.c_[e * static_cast<std::int64_t>(p_)] = v;  // v^p = v in F_p
  return r;
}

Series Series::shifted_exponents(std::int64_t k) const {
  Series r(var_, p_, end_ + k);
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

Series Series::truncated(std::int64_t new_end) const {
  Series r(var_, p_, std::min(end_, new_end));
  for (const auto& [e, v] : c_) {
    if (e < r.end_) r.c_[e] = v;
  }
  return r;
}

bool Series::operator==(const Series& o) const {
  return p_ == o.p_ && var_ == o.var_ && end_ == o.end_ && c_ == o.c_;
}

Series Series::from_ratfun_at_infinity(const RatFun& h, const std::string& var, std::int64_t known_end) {
  std::uint64_t p = h.modulus();
  if (h.is_zero()) return Series(var, p, known_end);
  std::int64_t dn = h.num().degree_or(0);
  std::int64_t dd = h.den().degree_or(0);
  std::int64_t shift = dd - dn;
  if (shift >= known_end) return Series(var, p, known_end);
  std::int64_t tail = known_end - shift;
  Poly revn(p), revd(p);
  for (const auto& [e, v] : h.num().terms()) revn.add_term(Fp(static_cast<std::int64_t>(v), p), dn - e);
  for (const auto& [e, v] : h.den().terms()) revd.add_term(Fp(static_cast<std::int64_t>(v), p), dd - e);
  Series sn = from_poly(revn, var, tail);
  Series sd = from_poly(revd, var, tail);
  return (sn * sd.inverse()).shifted_exponents(shift).truncated(known_end);
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  for (const auto& [e, v] : s.terms()) {
    os << v << "*" << s.var() << "^" << e << " + ";
  }
  os << "O(" << s.var() << "^" << s.known_end() << ")";
  return os;
}

Series solve_artin_schreier_series(const Series& f, const Fp& zeta, std::int64_t precision) {
  if (precision < 1) throw Error("requested precision must be positive");
  if (f.known_end() < precision) {
    throw PrecisionExhausted("operand window ends at " + std::to_string(f.known_end()) +
                             " but precision " + std::to_string(precision) + " was requested");
  }
  if (auto v = f.valuation(); v && *v < 1) {
    throw Error("series must vanish at the place (valuation >= 1)");
  }
  Series fw = f.truncated(precision);
  Series y = Series::constant(zeta, f.var(), precision);
  for (int pass = 0; pass < 200; ++pass) {
    Series residual = (y.frob_pow_p().truncated(precision) - y - fw).truncated(precision);
    if (residual.is_zero_to_window()) return y;
    y = (y + residual).truncated(precision);
  }
  throw InternalError("Artin-Schreier series iteration failed to converge");
}

}  // namespace cartierlab
