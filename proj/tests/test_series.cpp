#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cartierlab/series.hpp"

using namespace cartierlab;

namespace {

Series mono(std::uint64_t p, std::int64_t c, std::int64_t e, std::int64_t end) {
  return Series::monomial(Fp(c, p), e, "u", end);
}

}  // namespace

TEST_CASE("windows combine pessimistically") {
  std::uint64_t p = 5;
  Series a = mono(p, 1, 2, 9);
  Series b = mono(p, 3, 4, 6);
  CHECK((a + b).known_end() == 6);
  // product window: min(end_a + v_b, end_b + v_a) = min(9+4, 6+2) = 8
  Series ab = a * b;
  CHECK(ab.known_end() == 8);
  CHECK(ab.coeff(6) == Fp(3, p));
  CHECK(ab.valuation() == 6);
}

TEST_CASE("frobenius power is exact, not pessimistic") {
  std::uint64_t p = 3;
  Series a = mono(p, 2, 1, 4) + mono(p, 1, 2, 4);
  Series cube = a.frob_pow_p();
  CHECK(cube.known_end() == 12);
  CHECK(cube.coeff(3) == Fp(2, p));
  CHECK(cube.coeff(6) == Fp(1, p));
  CHECK(cube.coeff(9).is_zero());
}

TEST_CASE("series inverse multiplies back to one") {
  std::uint64_t p = 7;
  Series s = mono(p, 2, -1, 5) + mono(p, 3, 0, 5) + mono(p, 1, 2, 5);
  Series inv = s.inverse();
  Series prod = s * inv;
  CHECK(prod.coeff(0) == Fp::one(p));
  for (std::int64_t e = 1; e < prod.known_end(); ++e) CHECK(prod.coeff(e).is_zero());
}

TEST_CASE("coefficients outside the window raise PrecisionExhausted") {
  Series s = mono(5, 1, 0, 3);
  CHECK(s.coeff(2).is_zero());
  CHECK_THROWS_AS(s.coeff(3), PrecisionExhausted);
  CHECK_THROWS_AS(Series("u", 5, 4).inverse(), PrecisionExhausted);
}

TEST_CASE("expansion of rational functions at infinity") {
  std::uint64_t p = 5;
  // 1/(x-1) = u/(1-u) = u + u^2 + u^3 + ...
  RatFun h(Poly(Fp::one(p)), Poly::variable(p) - Poly(Fp::one(p)));
  Series s = Series::from_ratfun_at_infinity(h, "u", 6);
  for (std::int64_t e = 1; e < 6; ++e) CHECK(s.coeff(e) == Fp::one(p));
  CHECK(s.coeff(0).is_zero());
  // x^2 expands to u^{-2}
  Series sq = Series::from_ratfun_at_infinity(RatFun(Poly::monomial(Fp::one(p), 2)), "u", 6);
  CHECK(sq.coeff(-2) == Fp::one(p));
  CHECK(sq.valuation() == -2);
}

TEST_CASE("Artin-Schreier solver: zero input returns the constant") {
  for (std::uint64_t p : {2, 3, 5}) {
    Series zero("u", p, 10);
    for (std::uint64_t z = 0; z < p; ++z) {
      Series y = solve_artin_schreier_series(zero, Fp(static_cast<std::int64_t>(z), p), 10);
      CHECK(y.coeff(0) == Fp(static_cast<std::int64_t>(z), p));
      for (std::int64_t e = 1; e < 10; ++e) CHECK(y.coeff(e).is_zero());
    }
  }
}

TEST_CASE("Artin-Schreier solver: residual valuation meets the request") {
  std::uint64_t p = 2;
  Series f = mono(p, 1, 3, 20) + mono(p, 1, 4, 20);  // u^3 + u^4, exact to u^20
  for (std::int64_t prec : {6, 7, 12}) {
    Series y = solve_artin_schreier_series(f, Fp(0, p), prec);
    Series residual = y.frob_pow_p().truncated(prec) - y - f.truncated(prec);
    CHECK(residual.is_zero_to_window());
    CHECK(residual.known_end() >= prec);
  }
  // the stated expansion: y = u^3 + u^4 + u^6 + O(u^7)
  Series y = solve_artin_schreier_series(f, Fp(0, p), 7);
  CHECK(y.coeff(3) == Fp::one(p));
  CHECK(y.coeff(4) == Fp::one(p));
  CHECK(y.coeff(5).is_zero());
  CHECK(y.coeff(6) == Fp::one(p));
}

TEST_CASE("Artin-Schreier solver: the p solutions differ in their constant terms") {
  std::uint64_t p = 5;
  Series f = mono(p, 2, 1, 12) + mono(p, 3, 4, 12);
  std::vector<Series> sols;
  for (std::uint64_t z = 0; z < p; ++z) {
    sols.push_back(solve_artin_schreier_series(f, Fp(static_cast<std::int64_t>(z), p), 12));
  }
  for (std::size_t i = 0; i < sols.size(); ++i) {
    for (std::size_t j = i + 1; j < sols.size(); ++j) {
      CHECK(sols[i].coeff(0) != sols[j].coeff(0));
    }
  }
}

TEST_CASE("Artin-Schreier solver: insufficient windows are refused") {
  std::uint64_t p = 2;
  Series f = mono(p, 1, 3, 6) + mono(p, 1, 4, 6);
  CHECK_THROWS_AS(solve_artin_schreier_series(f, Fp(0, p), 7), PrecisionExhausted);
  CHECK_NOTHROW(solve_artin_schreier_series(f, Fp(0, p), 6));
  // nonvanishing input is a precondition violation
  Series bad = mono(p, 1, 0, 6);
  CHECK_THROWS_AS(solve_artin_schreier_series(bad, Fp(0, p), 4), Error);
}
