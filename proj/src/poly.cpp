#include "cartierlab/poly.hpp"

#include <ostream>
#include <vector>

namespace cartierlab {

Poly::Poly(std::uint64_t p) : p_(p) { require_prime_modulus(p); }

Poly::Poly(const Fp& constant) : p_(constant.modulus()) {
  if (!constant.is_zero()) c_[0] = constant.value();
}

Poly Poly::monomial(const Fp& coeff, std::int64_t exp) {
  if (exp < 0) throw Error("negative exponent in Poly");
  Poly f(coeff.modulus());
  if (!coeff.is_zero()) f.c_[exp] = coeff.value();
  return f;
}

Poly Poly::variable(std::uint64_t p) { return monomial(Fp::one(p), 1); }

bool Poly::is_constant() const { return c_.empty() || c_.rbegin()->first == 0; }

std::optional<std::int64_t> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.rbegin()->first;
}

std::int64_t Poly::degree_or(std::int64_t if_zero) const { return c_.empty() ? if_zero : c_.rbegin()->first; }

Fp Poly::coeff(std::int64_t e) const {
  auto it = c_.find(e);
  return Fp(it == c_.end() ? 0 : static_cast<std::int64_t>(it->second), p_);
}

Fp Poly::leading_coeff() const {
  if (c_.empty()) return Fp::zero(p_);
  return Fp(static_cast<std::int64_t>(c_.rbegin()->second), p_);
}

void Poly::add_term(const Fp& coeff, std::int64_t exp) {
  if (exp < 0) throw Error("negative exponent in Poly");
  if (coeff.modulus() != p_) throw Error("mixed moduli in Poly");
  auto it = c_.find(exp);
  std::uint64_t v = coeff.value();
  if (it == c_.end()) {
    if (v != 0) c_[exp] = v;
    return;
  }
  std::uint64_t s = it->second + v;
  if (s >= p_) s -= p_;
  if (s == 0) {
    c_.erase(it);
  } else {
    it->second = s;
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (p_ != o.p_) throw Error("mixed moduli in Poly");
  Poly r = *this;
  for (const auto& [e, v] : o.c_) r.add_term(Fp(static_cast<std::int64_t>(v), p_), e);
  return r;
}

Poly Poly::operator-() const {
  Poly r(p_);
  for (const auto& [e, v] : c_) r.c_[e] = p_ - v;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (p_ != o.p_) throw Error("mixed moduli in Poly");
  Poly r(p_);
  for (const auto& [e1, v1] : c_) {
    for (const auto& [e2, v2] : o.c_) {
      std::uint64_t prod = mulmod(v1, v2, p_);
      auto it = r.c_.find(e1 + e2);
      if (it == r.c_.end()) {
        if (prod != 0) r.c_[e1 + e2] = prod;
      } else {
        std::uint64_t s = it->second + prod;
        if (s >= p_) s -= p_;
        if (s == 0) {
          r.c_.erase(it);
        } else {
          it->second = s;
        }
      }
    }
  }
  return r;
}

Poly Poly::operator*(const Fp& s) const {
  if (s.is_zero()) return Poly(p_);
  Poly r(p_);
  for (const auto& [e, v] : c_) r.c_[e] = mulmod(v, s.value(), p_);
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  Poly r(Fp::one(p_));
  Poly b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inv();
}

Poly Poly::derivative() const {
  Poly r(p_);
  for (const auto& [e, v] : c_) {
    if (e == 0) continue;
    Fp c = Fp(static_cast<std::int64_t>(v), p_) * Fp(e % static_cast<std::int64_t>(p_), p_);
    if (!c.is_zero()) r.c_[e - 1] = c.value();
  }
  return r;
}

Fp Poly::eval(const Fp& x) const {
  // Horner over the dense range is wasteful for sparse maps; walk terms.
  Fp acc = Fp::zero(p_);
  for (const auto& [e, v] : c_) {
    acc = acc + Fp(static_cast<std::int64_t>(v), p_) * x.pow(e);
  }
  return acc;
}

Poly Poly::shifted(const Fp& c) const {
  // Horner: fold from the top degree down with (x + c).
  if (is_zero()) return *this;
  Poly xc = variable(p_) + Poly(c);
  Poly r(p_);
  std::int64_t prev = -1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::int64_t e = it->first;
    if (prev >= 0) {
      for (std::int64_t k = 0; k < prev - e; ++k) r = r * xc;
    }
    r.add_term(Fp(static_cast<std::int64_t>(it->second), p_), 0);
    prev = e;
  }
  for (std::int64_t k = 0; k < prev; ++k) r = r * xc;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (a.p_ != b.p_) throw Error("mixed moduli in Poly");
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::uint64_t p = a.p_;
  q = Poly(p);
  r = a;
  Fp lead_inv = b.leading_coeff().inv();
  std::int64_t db = *b.degree();
  while (!r.is_zero() && *r.degree() >= db) {
    std::int64_t e = *r.degree() - db;
    Fp c = r.leading_coeff() * lead_inv;
    Poly t = monomial(c, e);
    q = q + t;
    r = r - t * b;
  }
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q(x.p_), r(x.p_);
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->first == 0) {
      os << it->second;
    } else {
      if (it->second != 1) os << it->second << "*";
      os << "x";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os;
}

}  // namespace cartierlab
