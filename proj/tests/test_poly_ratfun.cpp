#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cartierlab/parse.hpp"
#include "cartierlab/ratfun.hpp"
#include "oracles.hpp"

using namespace cartierlab;
using namespace cartierlab::testing;

TEST_CASE("polynomial divmod and gcd") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[trial % 4];
    Poly a = random_poly(rng, p, 8);
    Poly b = random_nonzero_poly(rng, p, 5);
    Poly q(p), r(p);
    Poly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree_or(-1) < b.degree_or(0));
    Poly g = Poly::gcd(a * b, b);
    if (!a.is_zero()) {
      Poly qq(p), rr(p);
      Poly::divmod(b.monic(), g, qq, rr);
      CHECK(rr.is_zero());
    }
  }
}

TEST_CASE("polynomial shift is composition with x + c") {
  std::mt19937_64 rng(7002);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11}[trial % 4];
    Poly f = random_poly(rng, p, 7);
    Fp c(rand_below(rng, static_cast<std::int64_t>(p)), p);
    Poly g = f.shifted(c);
    for (std::uint64_t xv = 0; xv < p; ++xv) {
      Fp x(static_cast<std::int64_t>(xv), p);
      CHECK(g.eval(x) == f.eval(x + c));
    }
  }
}

TEST_CASE("zero polynomial has the minus-infinity degree marker") {
  Poly z(5);
  CHECK(!z.degree().has_value());
  CHECK(z.degree_or(-100) == -100);
  CHECK(Poly(Fp(3, 5)).degree() == 0);
}

TEST_CASE("rational functions are canonical: reduced and monic") {
  std::uint64_t p = 5;
  Poly x = Poly::variable(p);
  // (2x^2 + 2x) / (4x) = (x + 1) * inverse stuff -> (3x + 3)/... canonical
  RatFun h(Poly::monomial(Fp(2, p), 2) + Poly::monomial(Fp(2, p), 1), Poly::monomial(Fp(4, p), 1));
  CHECK(h.den().leading_coeff() == Fp::one(p));
  CHECK(Poly::gcd(h.num(), h.den()).degree_or(0) == 0);
  // equality is syntactic on canonical forms
  RatFun k = RatFun(x + Poly(Fp::one(p))) * RatFun(Poly(Fp(3, p)));
  CHECK(h == k);
}

TEST_CASE("partial fractions: char-2 square denominators") {
  std::uint64_t p = 2;
  Poly x = Poly::variable(p);
  Poly den = x.pow(2) * (x + Poly(Fp::one(p))).pow(2);
  RatFun h(Poly(Fp::one(p)), den);  // 1/(x^2 (x+1)^2)
  PartialFractions pf = partial_fractions(h);
  CHECK(pf.polynomial_part.is_zero());
  REQUIRE(pf.parts.size() == 2);
  CHECK(pf.parts[0].center == Fp(0, p));
  CHECK(pf.parts[0].coeffs.size() == 1);
  CHECK(pf.parts[0].coeffs.at(2) == Fp::one(p));
  CHECK(pf.parts[1].center == Fp(1, p));
  CHECK(pf.parts[1].coeffs.at(2) == Fp::one(p));
  CHECK(pf.recombine() == h);
}

TEST_CASE("partial fractions: polynomials pass through") {
  for (std::uint64_t p : {2, 3, 7}) {
    RatFun h(Poly::monomial(Fp::one(p), 3));
    PartialFractions pf = partial_fractions(h);
    CHECK(pf.parts.empty());
    CHECK(pf.polynomial_part == Poly::monomial(Fp::one(p), 3));
  }
}

TEST_CASE("partial fractions: already-decomposed input") {
  std::uint64_t p = 3;
  RatFun h = RatFun::monomial(Fp::one(p), -1) + RatFun::monomial(Fp(2, p), -2);
  PartialFractions pf = partial_fractions(h);
  CHECK(pf.polynomial_part.is_zero());
  REQUIRE(pf.parts.size() == 1);
  CHECK(pf.parts[0].center == Fp(0, p));
  CHECK(pf.parts[0].coeffs.at(1) == Fp::one(p));
  CHECK(pf.parts[0].coeffs.at(2) == Fp(2, p));
}

TEST_CASE("partial fractions reject non-split denominators and report the factor") {
  std::uint64_t p = 3;
  Poly den = Poly::monomial(Fp::one(p), 2) + Poly(Fp::one(p));  // x^2 + 1, irreducible mod 3
  try {
    partial_fractions(RatFun(Poly(Fp::one(p)), den));
    FAIL("expected NonSplitDenominator");
  } catch (const NonSplitDenominator& e) {
    CHECK(e.factor() == "x^2 + 1");
  }
}

TEST_CASE("partial fractions recombine to the input on random split rationals") {
  std::mt19937_64 rng(7003);
  int done = 0;
  while (done < 500) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[static_cast<std::size_t>(done) % 5];
    RatFun h = random_split_ratfun(rng, p, 6);
    PartialFractions pf = partial_fractions(h);
    CHECK(pf.recombine() == h);
    ++done;
  }
}

TEST_CASE("p-power decomposition: stated examples") {
  std::uint64_t p = 3;
  auto comps = p_power_decompose(RatFun(Poly::monomial(Fp::one(p), 4)));
  CHECK(comps[1] == RatFun(Poly::variable(p)));
  CHECK(comps[0].is_zero());
  CHECK(comps[2].is_zero());

  comps = p_power_decompose(RatFun::monomial(Fp::one(p), -1));
  CHECK(comps[2] == RatFun::monomial(Fp::one(p), -1));
  CHECK(comps[0].is_zero());
  CHECK(comps[1].is_zero());

  RatFun h(Poly(Fp::one(p)), Poly::variable(p) + Poly(Fp::one(p)));  // 1/(x+1)
  comps = p_power_decompose(h);
  CHECK(comps[0] == h);
  CHECK(comps[1] == h * Fp(2, p));
  CHECK(comps[2] == h);
}

TEST_CASE("p-power decomposition: exact identity and uniqueness on random inputs") {
  std::mt19937_64 rng(7004);
  int done = 0;
  while (done < 500) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[static_cast<std::size_t>(done) % 4];
    RatFun h = random_ratfun(rng, p, 6);
    auto comps = p_power_decompose(h);
    RatFun sum(p);
    for (std::size_t i = 0; i < p; ++i) {
      sum = sum + comps[i].pow(static_cast<std::int64_t>(p)) * RatFun::monomial(Fp::one(p), static_cast<std::int64_t>(i));
    }
    CHECK(sum == h);
    // uniqueness: the decomposition of h - sum has all-zero components
    auto zero_comps = p_power_decompose(h - sum);
    for (std::size_t i = 0; i < p; ++i) CHECK(zero_comps[i].is_zero());
    ++done;
  }
}

TEST_CASE("orders of vanishing at points and infinity") {
  std::uint64_t p = 5;
  RatFun h = parse_f("(x-2)^-3 + x^2", p);
  CHECK(h.ord_at(Fp(2, p)) == -3);
  CHECK(h.ord_at(Fp(1, p)) >= 0);
  CHECK(h.ord_at_infinity() == -2);
  CHECK(parse_f("x^-4", p).ord_at_infinity() == 4);
  CHECK(RatFun(p).ord_at(Fp(0, p)) == RatFun::kOrdInfinite);
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  std::mt19937_64 rng(7005);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[trial % 3];
    RatFun a = random_ratfun(rng, p, 4);
    RatFun b = random_ratfun(rng, p, 4);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}
