#include "cartierlab/ascover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cartierlab {

RamificationData::RamificationData(std::uint64_t p_in, std::vector<std::int64_t> d_in)
    : p(p_in), d(std::move(d_in)) {
  require_prime_modulus(p);
  for (std::int64_t dq : d) {
    if (dq < 1) throw Error("ramification break must be >= 1");
    if (std::gcd(dq, static_cast<std::int64_t>(p)) != 1) {
      throw Error("ramification break " + std::to_string(dq) + " is divisible by p");
    }
  }
}

std::int64_t g_minus_s(const RamificationData& data, std::int64_t g_x, std::int64_t s_x) {
  if (g_x < 0 || s_x < 0 || s_x > g_x) throw Error("need 0 <= s_X <= g_X");
  std::int64_t pi = static_cast<std::int64_t>(data.p);
  std::int64_t sum = 0;
  for (std::int64_t dq : data.d) sum += (pi - 1) * (dq - 1) / 2;
  return pi * (g_x - s_x) + sum;
}

namespace {

struct BadTerm {
  bool in_poly;
  Fp center;          // meaningful when !in_poly
  std::int64_t order;  // polar order or polynomial exponent, divisible by p
  Fp coeff;
};

// Largest p-divisible term of f, polynomial part first, then centers in
// residue order.
std::optional<BadTerm> find_bad_term(std::uint64_t p, const PartialFractions& pf) {
  std::optional<BadTerm> best;
  auto consider = [&](const BadTerm& t) {
    if (!best || t.order > best->order) best = t;
  };
  std::int64_t ip = static_cast<std::int64_t>(p);
  for (const auto& [e, v] : pf.polynomial_part.terms()) {
    if (e >= ip && e % ip == 0) {
      consider(BadTerm{true, Fp::zero(p), e, Fp(static_cast<std::int64_t>(v), p)});
    }
  }
  for (const auto& part : pf.parts) {
    for (const auto& [k, c] : part.coeffs) {
      if (k % ip == 0 && !c.is_zero()) consider(BadTerm{false, part.center, k, c});
    }
  }
  return best;
}

}  // namespace

ReducedForm as_reduce(std::uint64_t p, const RatFun& f) {
  require_prime_modulus(p);
  if (f.modulus() != p) throw Error("modulus mismatch in as_reduce");
  RatFun cur = f;
  RatFun witness(p);
  for (;;) {
    PartialFractions pf = partial_fractions(cur);
    std::optional<BadTerm> bad = find_bad_term(p, pf);
    if (!bad) break;
    std::int64_t k = bad->order / static_cast<std::int64_t>(p);
    // c^{1/p} = c over F_p, so g = c * (x - z)^{-k} (resp. c * x^k) peels the
    // order-pk term exactly.
    RatFun g(p);
    if (bad->in_poly) {
      g = RatFun(Poly::monomial(bad->coeff, k));
    } else {
      g = RatFun(Poly(bad->coeff), (Poly::variable(p) - Poly(bad->center)).pow(static_cast<std::uint64_t>(k)));
    }
    cur = cur - (g.pow(static_cast<std::int64_t>(p)) - g);
    witness = witness + g;
  }
  if (cur.is_constant()) {
    if (cur.is_zero()) {
      throw ReducibleCover("f lies in (y^p - y)(F_p(x)); the equation defines a split cover, not a curve");
    }
    throw ReducibleCover("f reduces to a nonzero constant; absorbing it needs a point in an extension of F_p");
  }
  return ReducedForm{cur, witness};
}

ASCover build_cover(std::uint64_t p, const RatFun& f) {
  ReducedForm red = as_reduce(p, f);
  PartialFractions pf = partial_fractions(red.f);

  bool has_poles = !pf.parts.empty();
  bool poly_nonconstant = pf.polynomial_part.degree_or(0) > 0;
  if (has_poles && poly_nonconstant) {
    throw MixedShape("f has both finite poles and a nonconstant polynomial part; apply a Mobius substitution first");
  }
  if (!pf.polynomial_part.coeff(0).is_zero()) {
    throw ReducibleCover("constant term of f is not in (y^p - y)(F_p); removing it needs a point in an extension of F_p");
  }

  ASCover cover{p, red.f, pf.polynomial_part, pf.parts, {}, poly_nonconstant, 0, 0};
  if (poly_nonconstant) {
    cover.branch.push_back(BranchPoint{std::nullopt, *pf.polynomial_part.degree()});
  } else {
    std::sort(cover.parts.begin(), cover.parts.end(),
              [](const PolarPart& a, const PolarPart& b) { return a.center < b.center; });
    for (const auto& part : cover.parts) {
      cover.branch.push_back(BranchPoint{part.center, part.order()});
    }
  }

  std::int64_t ip = static_cast<std::int64_t>(p);
  std::int64_t sum_d1 = 0;
  for (const auto& bp : cover.branch) sum_d1 += bp.d + 1;
  cover.genus = (ip - 1) * (sum_d1 - 2) / 2;
  cover.p_rank = (ip - 1) * (static_cast<std::int64_t>(cover.branch.size()) - 1);
  if (cover.genus < 0 || cover.p_rank < 0 || cover.p_rank > cover.genus) {
    throw InternalError("inconsistent genus/p-rank from branch data");
  }
  return cover;
}

RamificationData ASCover::ram() const {
  std::vector<std::int64_t> ds;
  ds.reserve(branch.size());
  for (const auto& bp : branch) ds.push_back(bp.d);
  return RamificationData(p, std::move(ds));
}

}  // namespace cartierlab
