#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "cartierlab/parse.hpp"
#include "cartierlab/regdiff.hpp"
#include "oracles.hpp"

using namespace cartierlab;
using namespace cartierlab::testing;

namespace {

ASCover cover_of(const std::string& f, std::uint64_t p) { return build_cover(p, parse_f(f, p)); }

DiffAtom fin(std::uint64_t p, std::int64_t center, std::int64_t a, std::int64_t b) {
  return DiffAtom{true, Fp(center, p), a, b};
}

}  // namespace

TEST_CASE("atom valuations at branch points") {
  ASCover c7 = cover_of("x^-4", 7);
  CHECK(atom_valuation(c7, fin(7, 0, 2, 4), c7.branch[0]) == -14 - 16 + 30);
  CHECK(atom_valuation(c7, fin(7, 0, 2, 4), c7.branch[0]) == 0);

  ASCover c2 = cover_of("x^-3", 2);
  CHECK(atom_valuation(c2, fin(2, 0, 2, 0), c2.branch[0]) == 0);

  // dx itself gains the different at a finite branch point
  for (const auto& [f, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"x^-4", 7}, {"x^-3", 2}}) {
    ASCover c = cover_of(f, p);
    DiffAtom dx{false, Fp(0, p), 0, 0};
    std::int64_t d = c.branch[0].d;
    CHECK(atom_valuation(c, dx, c.branch[0]) ==
          (static_cast<std::int64_t>(p) - 1) * (d + 1));
  }
}

TEST_CASE("candidate atoms: single-pole p = 7 enumeration") {
  ASCover c = cover_of("x^-4", 7);
  auto atoms = candidate_atoms(c);
  // direct enumeration of 7a + 4b <= 30, a >= 1, 0 <= b <= 6
  std::int64_t expected = 0;
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = 0; b <= 6; ++b) {
      if (7 * a + 4 * b <= 30) ++expected;
    }
  }
  CHECK(expected == 15);
  CHECK(static_cast<std::int64_t>(atoms.size()) == expected);
  for (const auto& atom : atoms) {
    CHECK(atom.finite_pole);
    CHECK(atom.a >= 1);
    CHECK(7 * atom.a + 4 * atom.b <= 30);
    CHECK(atom_valuation(c, atom, c.branch[0]) >= 0);
  }
}

TEST_CASE("candidate atoms: branched infinity") {
  ASCover c = cover_of("x^3", 2);
  auto atoms = candidate_atoms(c);
  REQUIRE(atoms.size() == 1);  // 2a + 3b <= 0 forces a = b = 0, i.e. just dx
  CHECK_FALSE(atoms[0].finite_pole);
  CHECK(atoms[0].a == 0);
  CHECK(atoms[0].b == 0);
}

TEST_CASE("candidate atoms: two branch points in characteristic 2") {
  ASCover c = cover_of("x^-3 + (x-1)^-3", 2);
  auto atoms = candidate_atoms(c);
  REQUIRE(atoms.size() == 4);
  CHECK(atoms[0] == fin(2, 0, 1, 0));
  CHECK(atoms[1] == fin(2, 0, 2, 0));
  CHECK(atoms[2] == fin(2, 1, 1, 0));
  CHECK(atoms[3] == fin(2, 1, 2, 0));
}

TEST_CASE("regular basis: single-pole p = 7 is monomial with a >= 2") {
  ASCover c = cover_of("x^-4", 7);
  RegularBasis basis = regular_basis(c);
  REQUIRE(basis.dim() == 9);
  std::set<std::pair<std::int64_t, std::int64_t>> got;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t j = 0; j < basis.atoms.size(); ++j) {
      if (basis.vecs[i][j] != 0) {
        ++nonzero;
        where = j;
      }
    }
    CHECK(nonzero == 1);  // pure monomials survive
    got.emplace(basis.atoms[where].a, basis.atoms[where].b);
  }
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::int64_t a = 2; a <= 4; ++a) {
    for (std::int64_t b = 0; 7 * a + 4 * b <= 30; ++b) expected.emplace(a, b);
  }
  CHECK(got == expected);
}

TEST_CASE("regular basis: genus-1 polynomial curve is spanned by dx") {
  ASCover c = cover_of("x^3", 2);
  RegularBasis basis = regular_basis(c);
  REQUIRE(basis.dim() == 1);
  YDifferential w = basis.element(0);
  CHECK(w.component(0) == RatFun(Poly(Fp::one(2))));
  CHECK(w.component(1).is_zero());
}

TEST_CASE("regular basis: individually irregular atoms combine across centers") {
  ASCover c = cover_of("x^-3 + (x-1)^-3", 2);
  RegularBasis basis = regular_basis(c);
  REQUIRE(basis.dim() == 3);
  // the span contains x^-2 dx, (x-1)^-2 dx and the combination (x^-1 + (x-1)^-1) dx
  YDifferential combo(2);
  combo.set_component(0, parse_f("x^-1 + (x-1)^-1", 2));
  CHECK_NOTHROW(basis.basis_coords(basis.atom_coords(combo)));
  YDifferential single(2);
  single.set_component(0, parse_f("x^-1", 2));
  CHECK_THROWS_AS(basis.basis_coords(basis.atom_coords(single)), ImageOutsideSpan);
  // and each summand alone really is irregular at a point over infinity
  CHECK(verify_regular(c, combo));
  CHECK_FALSE(verify_regular(c, single));
  auto vals = infinity_valuations(c, single, 8);
  CHECK(*std::min_element(vals.begin(), vals.end()) == -1);
}

TEST_CASE("verify_regular accepts every basis element and the zero differential") {
  for (const auto& [f, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"x^-4", 7}, {"x^-4 + x^-3", 7}, {"x^3", 2}, {"x^-3 + (x-1)^-3", 2}, {"x^-10 + x^-8", 3}}) {
    ASCover c = cover_of(f, p);
    RegularBasis basis = regular_basis(c);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      CHECK(verify_regular(c, basis.element(i)));
    }
    CHECK(verify_regular(c, YDifferential(p)));
  }
}

TEST_CASE("verify_regular rejects poles away from branch points") {
  ASCover c = cover_of("x^-4", 7);
  YDifferential w(7);
  w.set_component(0, parse_f("(x-3)^-1", 7));
  CHECK_FALSE(verify_regular(c, w));
  // pole above a non-rational point
  Poly den = Poly::monomial(Fp::one(7), 2) + Poly(Fp::one(7));
  YDifferential w2(7);
  w2.set_component(0, RatFun(Poly(Fp::one(7)), den));
  CHECK_FALSE(verify_regular(c, w2));
}

TEST_CASE("dimension certificate holds across a random corpus") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[trial % 4];
    RatFun f(p);
    std::int64_t ip = static_cast<std::int64_t>(p);
    std::int64_t centers = 1 + rand_below(rng, std::min<std::int64_t>(ip, 3));
    for (std::int64_t k = 0; k < centers; ++k) {
      std::int64_t d;
      do {
        d = 1 + rand_below(rng, 7);
      } while (d % ip == 0);
      Poly lin = Poly::variable(p) - Poly(Fp(k, p));
      f = f + RatFun(Poly(Fp(1 + rand_below(rng, ip - 1), p)), lin.pow(static_cast<std::uint64_t>(d)));
      for (std::int64_t e = 1; e < d; ++e) {
        if (e % ip == 0) continue;
        std::int64_t cc = rand_below(rng, ip);
        if (cc) f = f + RatFun(Poly(Fp(cc, p)), lin.pow(static_cast<std::uint64_t>(e)));
      }
    }
    ASCover cover = build_cover(p, f);
    RegularBasis basis = regular_basis(cover);
    CHECK(basis.dim() == static_cast<std::size_t>(cover.genus));
  }
}

TEST_CASE("span membership matches verify_regular on random candidate combinations") {
  std::mt19937_64 rng(9002);
  ASCover c = cover_of("x^-3 + (x-2)^-4", 5);
  RegularBasis basis = regular_basis(c);
  int regular_seen = 0, irregular_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<std::uint64_t> coords(basis.atoms.size(), 0);
    for (auto& v : coords) {
      if (rand_below(rng, 3) == 0) v = static_cast<std::uint64_t>(rand_below(rng, 5));
    }
    YDifferential w = YDifferential::from_atoms(5, basis.atoms, coords);
    bool in_span = true;
    try {
      basis.basis_coords(basis.atom_coords(w));
    } catch (const ImageOutsideSpan&) {
      in_span = false;
    }
    CHECK(in_span == verify_regular(c, w));
    (in_span ? regular_seen : irregular_seen)++;
  }
  CHECK(regular_seen > 0);
  CHECK(irregular_seen > 0);
}

TEST_CASE("divisor degree: monomial basis elements have total valuation 2g - 2") {
  for (const auto& [f, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"x^-4", 7}, {"x^-3 + (x-1)^-3", 2}, {"x^-6", 5}}) {
    ASCover c = cover_of(f, p);
    RegularBasis basis = regular_basis(c);
    std::int64_t expect = 2 * c.genus - 2;
    std::int64_t window = 2 * c.genus + 6;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      YDifferential w = basis.element(i);
      std::int64_t total = 0;
      for (const auto& place : c.branch) total += branch_valuation(c, w, place);
      for (std::int64_t v : infinity_valuations(c, w, window)) total += v;
      CHECK(total <= expect);
      // pure b = 0 monomials have no zeros away from the checked places
      std::size_t nonzero = 0;
      bool only_b0 = true;
      for (std::size_t j = 0; j < basis.atoms.size(); ++j) {
        if (basis.vecs[i][j] != 0) {
          ++nonzero;
          only_b0 = only_b0 && basis.atoms[j].b == 0;
        }
      }
      if (nonzero == 1 && only_b0) CHECK(total == expect);
    }
  }
}
