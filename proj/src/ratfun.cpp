#include "cartierlab/ratfun.hpp"

#include <ostream>
#include <sstream>

namespace cartierlab {

RatFun::RatFun(std::uint64_t p) : num_(p), den_(Fp::one(p)) {}

RatFun::RatFun(const Poly& n) : num_(n), den_(Fp::one(n.modulus())) {}

RatFun::RatFun(const Poly& n, const Poly& d) : num_(n), den_(d) { normalize(); }

RatFun RatFun::constant(const Fp& c) { return RatFun(Poly(c)); }

RatFun RatFun::monomial(const Fp& c, std::int64_t e) {
  std::uint64_t p = c.modulus();
  if (e >= 0) return RatFun(Poly::monomial(c, e));
  return RatFun(Poly(c), Poly::monomial(Fp::one(p), -e));
}

void RatFun::normalize() {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Fp::one(num_.modulus()));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree_or(0) > 0) {
    Poly q(num_.modulus()), r(num_.modulus());
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Fp lead = den_.leading_coeff();
  if (!(lead == Fp::one(num_.modulus()))) {
    Fp inv = lead.inv();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

bool RatFun::is_polynomial() const { return den_.degree_or(0) == 0; }

bool RatFun::is_constant() const { return is_polynomial() && num_.is_constant(); }

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator*(const Fp& s) const { return RatFun(num_ * s, den_); }

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw Error("division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(std::int64_t e) const {
  if (e < 0) {
    if (is_zero()) throw Error("negative power of zero");
    return RatFun(den_.pow(static_cast<std::uint64_t>(-e)), num_.pow(static_cast<std::uint64_t>(-e)));
  }
  return RatFun(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

namespace {

std::int64_t poly_ord_at(const Poly& f, const Fp& c) {
  if (f.is_zero()) return RatFun::kOrdInfinite;
  Poly r = f;
  Poly lin = Poly::variable(f.modulus()) - Poly(c);
  std::int64_t ord = 0;
  while (r.eval(c).is_zero()) {
    Poly q(f.modulus()), rem(f.modulus());
    Poly::divmod(r, lin, q, rem);
    r = q;
    ++ord;
  }
  return ord;
}

}  // namespace

std::int64_t RatFun::ord_at(const Fp& c) const {
  if (is_zero()) return kOrdInfinite;
  return poly_ord_at(num_, c) - poly_ord_at(den_, c);
}

std::int64_t RatFun::ord_at_infinity() const {
  if (is_zero()) return kOrdInfinite;
  return den_.degree_or(0) - num_.degree_or(0);
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) {
  if (f.is_polynomial()) return os << f.num();
  return os << "(" << f.num() << ")/(" << f.den() << ")";
}

std::int64_t PolarPart::order() const {
  std::int64_t m = 0;
  for (const auto& [k, c] : coeffs) {
    if (!c.is_zero() && k > m) m = k;
  }
  return m;
}

RatFun PolarPart::to_ratfun(std::uint64_t p) const {
  RatFun sum(p);
  Poly lin = Poly::variable(p) - Poly(center);
  for (const auto& [k, c] : coeffs) {
    if (c.is_zero()) continue;
    sum = sum + RatFun(Poly(c), lin.pow(static_cast<std::uint64_t>(k)));
  }
  return sum;
}

RatFun PartialFractions::recombine() const {
  std::uint64_t p = polynomial_part.modulus();
  RatFun sum(polynomial_part);
  for (const auto& part : parts) sum = sum + part.to_ratfun(p);
  return sum;
}

PartialFractions partial_fractions(const RatFun& h) {
  std::uint64_t p = h.modulus();
  PartialFractions out{Poly(p), {}};

  Poly q(p), r(p);
  Poly::divmod(h.num(), h.den(), q, r);
  out.polynomial_part = q;
  if (r.is_zero()) return out;

  // Factor the denominator into linear pieces by scanning F_p for roots.
  Poly den = h.den();
  if (p > (1ull << 22)) {
    throw Error("partial fractions: field too large for linear-factor root scan");
  }
  struct Root {
    Fp c;
    std::int64_t mult;
    Poly cofactor;  // den / (x - c)^mult
  };
  std::vector<Root> roots;
  Poly rest = den;
  for (std::uint64_t cv = 0; cv < p && rest.degree_or(0) > 0; ++cv) {
    Fp c(static_cast<std::int64_t>(cv), p);
    if (!rest.eval(c).is_zero()) continue;
    Poly lin = Poly::variable(p) - Poly(c);
    std::int64_t mult = 0;
    while (rest.eval(c).is_zero()) {
      Poly qq(p), rr(p);
      Poly::divmod(rest, lin, qq, rr);
      rest = qq;
      ++mult;
    }
    roots.push_back(Root{c, mult, Poly(p)});
  }
  if (rest.degree_or(0) > 0) {
    std::ostringstream os;
    os << rest.monic();
    throw NonSplitDenominator(os.str());
  }
  for (auto& root : roots) {
    Poly lin = Poly::variable(p) - Poly(root.c);
    Poly qq(p), rr(p);
    Poly::divmod(den, lin.pow(static_cast<std::uint64_t>(root.mult)), qq, rr);
    root.cofactor = qq;
  }

  // Principal part at c: Taylor-expand num / cofactor around c to order mult.
  for (const auto& root : roots) {
    Poly as = r.shifted(root.c);
    Poly bs = root.cofactor.shifted(root.c);
    Fp b0inv = bs.coeff(0).inv();
    std::vector<Fp> taylor;
    taylor.reserve(static_cast<std::size_t>(root.mult));
    for (std::int64_t t = 0; t < root.mult; ++t) {
      Fp acc = as.coeff(t);
      for (std::int64_t s = 0; s < t; ++s) {
        acc = acc - taylor[static_cast<std::size_t>(s)] * bs.coeff(t - s);
      }
      taylor.push_back(acc * b0inv);
    }
    PolarPart part{root.c, {}};
    for (std::int64_t t = 0; t < root.mult; ++t) {
      Fp c = taylor[static_cast<std::size_t>(t)];
      if (!c.is_zero()) part.coeffs.emplace(root.mult - t, c);
    }
    if (!part.coeffs.empty()) out.parts.push_back(std::move(part));
  }
  return out;
}

std::vector<RatFun> p_power_decompose(const RatFun& h) {
  std::uint64_t p = h.modulus();
  std::vector<RatFun> comps(static_cast<std::size_t>(p), RatFun(p));
  if (h.is_zero()) return comps;
  Poly n = h.num() * h.den().pow(p - 1);
  std::vector<Poly> parts(static_cast<std::size_t>(p), Poly(p));
  for (const auto& [e, v] : n.terms()) {
    std::int64_t i = e % static_cast<std::int64_t>(p);
    parts[static_cast<std::size_t>(i)].add_term(Fp(static_cast<std::int64_t>(v), p), (e - i) / static_cast<std::int64_t>(p));
  }
  for (std::size_t i = 0; i < p; ++i) comps[i] = RatFun(parts[i], h.den());
  return comps;
}

}  // namespace cartierlab
