#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <azkit/padic.hpp>
#include <azkit/primes.hpp>

#include "oracle.hpp"

using namespace azkit;

TEST_CASE("PrimePowerModulus construction") {
  PrimePowerModulus m(5, 3);
  CHECK(m.p() == 5);
  CHECK(m.exponent() == 3);
  CHECK(m.modulus() == 125);
  CHECK(m.str() == "5^3");
  CHECK_THROWS_AS(PrimePowerModulus(6, 2), NotPrime);
  CHECK_THROWS_AS(PrimePowerModulus(561, 1), NotPrime);
  CHECK_THROWS_AS(PrimePowerModulus(5, 0), std::domain_error);
}

TEST_CASE("reduce") {
  CHECK(reduce(make_rat(3, 2), PrimePowerModulus(5, 1)).value() == 4);
  CHECK(reduce(BigRat(0), PrimePowerModulus(7, 3)).value() == 0);
  CHECK_THROWS_AS(reduce(make_rat(1, 5), PrimePowerModulus(5, 2)),
                  DenominatorDivisibleByP);
  CHECK_THROWS_AS(reduce(make_rat(3, 10), PrimePowerModulus(5, 1)),
                  DenominatorDivisibleByP);
  // negative values land on the canonical representative
  CHECK(reduce(BigRat(-6), PrimePowerModulus(5, 1)).value() == 4);
}

TEST_CASE("reduce matches exhaustive search on small moduli") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 400);
  for (unsigned long p : {5ul, 7ul, 11ul}) {
    for (unsigned m = 1; m <= 2; ++m) {
      PrimePowerModulus M(p, m);
      for (int i = 0; i < 60; ++i) {
        BigRat r = make_rat(num(rng), den(rng));
        if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p)) continue;
        CHECK(reduce(r, M).value() ==
              oracle::reduce_bruteforce(r.get_num(), r.get_den(), M.modulus()));
      }
    }
  }
}

TEST_CASE("vp") {
  CHECK(vp(make_rat(50, 3), 5) == 2);
  CHECK(vp(BigInt(7), 7) == 1);
  CHECK(vp(make_rat(3, 25), 5) == -2);
  CHECK(vp(BigInt(360), 2) == 3);
  CHECK_THROWS_AS(vp(BigRat(0), 5), std::domain_error);
  CHECK_THROWS_AS(vp(BigInt(0), 5), std::domain_error);
}

TEST_CASE("vp is additive over products") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-2000, 2000);
  std::uniform_int_distribution<long> den(1, 2000);
  const BigInt p = 5;
  int tested = 0;
  while (tested < 200) {
    BigRat a = make_rat(num(rng), den(rng));
    BigRat b = make_rat(num(rng), den(rng));
    if (a == 0 || b == 0) continue;
    ++tested;
    CHECK(vp(a * b, p) == vp(a, p) + vp(b, p));
  }
}

TEST_CASE("congruent") {
  PrimePowerModulus m53(5, 3);
  CHECK(congruent(make_rat(7, 4), make_rat(7, 4), m53));  // reflexive
  CHECK(congruent(BigRat(126), BigRat(1), m53));
  CHECK(congruent(BigRat(26), BigRat(1), PrimePowerModulus(5, 2)));
  CHECK_FALSE(congruent(BigRat(26), BigRat(1), m53));
  CHECK_THROWS_AS(congruent(make_rat(1, 5), BigRat(0), m53),
                  DenominatorDivisibleByP);
}

TEST_CASE("congruent valuation route agrees with reduce equality") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (unsigned long p : {5ul, 7ul, 13ul}) {
    for (unsigned m = 1; m <= 3; ++m) {
      PrimePowerModulus M(p, m);
      for (int i = 0; i < 80; ++i) {
        BigRat a = make_rat(num(rng), den(rng));
        BigRat b = make_rat(num(rng), den(rng));
        if (mpz_divisible_ui_p(a.get_den().get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(b.get_den().get_mpz_t(), p)) continue;
        CHECK(congruent(a, b, M) == (reduce(a, M) == reduce(b, M)));
      }
    }
  }
}

TEST_CASE("mod_pow") {
  PrimePowerModulus m53(5, 3);
  CHECK(mod_pow(256, 4, m53) == reduce(ipow(256, 4ul), m53));
  CHECK(mod_pow(123456, 0, m53).value() == 1);
  CHECK(mod_pow(2, 4, PrimePowerModulus(5, 1)).value() == 1);
  for (unsigned long b = 1; b <= 20; ++b)
    for (unsigned long e = 0; e <= 12; ++e)
      for (unsigned long p : {5ul, 7ul, 11ul, 13ul})
        for (unsigned m = 1; m <= 3; ++m) {
          PrimePowerModulus M(p, m);
          CHECK(mod_pow(b, e, M) == reduce(ipow(b, e), M));
        }
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(Residue(2, PrimePowerModulus(5, 1))).value() == 3);
  Residue r(16, PrimePowerModulus(7, 3));
  CHECK((mod_inv(r) * r).value() == 1);
  CHECK_THROWS_AS(mod_inv(Residue(5, PrimePowerModulus(5, 2))), NotInvertible);
  CHECK_THROWS_AS(mod_inv(Residue(0, PrimePowerModulus(7, 1))), NotInvertible);
}

TEST_CASE("reduce round-trips through the denominator") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> num(-9000, 9000);
  std::uniform_int_distribution<long> den(1, 9000);
  for (unsigned long p : {5ul, 13ul, 97ul}) {
    for (unsigned m = 1; m <= 3; ++m) {
      PrimePowerModulus M(p, m);
      for (int i = 0; i < 80; ++i) {
        BigRat r = make_rat(num(rng), den(rng));
        if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p)) continue;
        CHECK(reduce(r, M) * reduce(r.get_den(), M) == reduce(r.get_num(), M));
      }
    }
  }
}

TEST_CASE("residues reject mixed moduli") {
  Residue a(3, PrimePowerModulus(5, 1));
  Residue b(3, PrimePowerModulus(5, 2));
  Residue c(3, PrimePowerModulus(7, 1));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * c, std::invalid_argument);
  CHECK(a != b);
}

TEST_CASE("residue arithmetic stays canonical") {
  PrimePowerModulus M(7, 2);
  Residue a(40, M), b(30, M);
  CHECK((a + b).value() == 21);
  CHECK((a - b).value() == 10);
  CHECK((b - a).value() == 39);
  CHECK((a * b).value() == (40 * 30) % 49);
}
