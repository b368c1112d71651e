#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cartierlab/field.hpp"

using namespace cartierlab;

TEST_CASE("field axioms hold exactly for random triples") {
  std::mt19937_64 rng(20240901);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (int trial = 0; trial < 1000; ++trial) {
      Fp a(static_cast<std::int64_t>(rng() % p), p);
      Fp b(static_cast<std::int64_t>(rng() % p), p);
      Fp c(static_cast<std::int64_t>(rng() % p), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Fp::zero(p));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == Fp::one(p));
        CHECK(a / a == Fp::one(p));
      }
      CHECK(a.pow(static_cast<std::int64_t>(p)) == a);  // Fermat
    }
  }
}

TEST_CASE("modulus must be prime") {
  CHECK_THROWS_AS(Fp(1, 4), Error);
  CHECK_THROWS_AS(Fp(0, 1), Error);
  CHECK_THROWS_AS(Fp(3, 91), Error);  // 7 * 13
  CHECK_NOTHROW(Fp(5, 1000003));
}

TEST_CASE("negative values reduce into [0, p)") {
  Fp a(-1, 7);
  CHECK(a.value() == 6);
  CHECK(Fp(-14, 7).is_zero());
}

TEST_CASE("division by zero is rejected") { CHECK_THROWS_AS(Fp::zero(5).inv(), Error); }

TEST_CASE("is_prime on small and large inputs") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1000001));  // 101 * 9901
  CHECK(is_prime(1000003));
  CHECK(is_prime(2147483647ull));
  CHECK_FALSE(is_prime(2147483647ull * 3));
}
