#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <azkit/primes.hpp>
#include <azkit/sequences.hpp>

#include "oracle.hpp"

using namespace azkit;

TEST_CASE("az_G small values") {
  CHECK(az_G(0) == 1);   // single term C(0,0)^2 C(0,0) 4^0
  CHECK(az_G(1) == 12);  // 8 + 4
  CHECK(az_G(2) == 164);  // 96 + 32 + 36
  CHECK(az_G(3) == 2352);
}

TEST_CASE("az_G matches the term-by-term oracle") {
  for (unsigned long n = 0; n <= 40; ++n) CHECK(az_G(n) == oracle::big_G(n));
}

TEST_CASE("az_G is positive and divisible by 4 for n >= 1") {
  for (unsigned long n = 1; n <= 50; ++n) {
    BigInt g = az_G(n);
    CHECK(g > 0);
    CHECK(mpz_divisible_ui_p(g.get_mpz_t(), 4));
  }
}

TEST_CASE("az_G summation order does not matter") {
  for (unsigned long n = 0; n <= 50; ++n)
    CHECK(oracle::big_G(n, /*reversed=*/false) ==
          oracle::big_G(n, /*reversed=*/true));
}

TEST_CASE("harmonic") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(2) == make_rat(3, 2));
  CHECK(harmonic(3) == make_rat(11, 6));
  for (unsigned long n = 1; n <= 100; ++n)
    CHECK(harmonic(n) - harmonic(n - 1) == make_rat(1, n));
}

TEST_CASE("harmonic denominators divide lcm(1..n)") {
  BigInt l = 1;
  for (unsigned long n = 1; n <= 100; ++n) {
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), n);
    CHECK(mpz_divisible_p(l.get_mpz_t(), harmonic(n).get_den().get_mpz_t()));
  }
}

TEST_CASE("euler_exact small values") {
  CHECK(euler_exact(0) == 1);
  CHECK(euler_exact(1) == 0);
  CHECK(euler_exact(2) == -1);
  CHECK(euler_exact(4) == 5);
  CHECK(euler_exact(6) == -61);
  CHECK(euler_exact(10) == -50521);
}

TEST_CASE("euler_exact matches the Entringer-triangle oracle") {
  for (unsigned long n = 0; n <= 30; ++n)
    CHECK(euler_exact(n) == oracle::euler_number(n));
}

TEST_CASE("odd-index Euler numbers vanish") {
  for (unsigned long m = 0; m <= 15; ++m) CHECK(euler_exact(2 * m + 1) == 0);
}

TEST_CASE("euler_mod examples") {
  CHECK(euler_mod(2, 5).value() == 4);  // E_2 = -1
  CHECK(euler_mod(3, 7).value() == 0);
  CHECK_THROWS_AS(euler_mod(4, BigInt(6)), NotPrime);
}

TEST_CASE("euler_mod agrees with reduced euler_exact") {
  for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
    PrimePowerModulus M(p, 1);
    for (unsigned long n = 0; n <= 30; ++n)
      CHECK(euler_mod(n, p) == reduce(euler_exact(n), M));
  }
}

TEST_CASE("euler_mod big-prime path agrees with the word engine's contract") {
  // p above 2^31 exercises the big-integer rows
  BigInt p("4294967311");
  PrimePowerModulus M(p, 1);
  for (unsigned long n = 0; n <= 14; ++n)
    CHECK(euler_mod(n, p) == reduce(euler_exact(n), M));
}

TEST_CASE("fermat_quotient2") {
  CHECK(fermat_quotient2(5) == 3);   // (16-1)/5
  CHECK(fermat_quotient2(7) == 9);   // (64-1)/7
  CHECK(fermat_quotient2(3) == 1);   // (4-1)/3
  CHECK(fermat_quotient2(11) == 93);
  CHECK_THROWS_AS(fermat_quotient2(9), NotPrime);   // 255 = 9*28 + 3
  CHECK_THROWS_AS(fermat_quotient2(2), NotPrime);
  CHECK_THROWS_AS(fermat_quotient2(15), NotPrime);
}

TEST_CASE("partial sums: frozen values") {
  CHECK(sum_central_H2(0) == 0);
  CHECK(sum_central_H2(1) == make_rat(1, 4));
  CHECK(sum_central_H2(2) == make_rat(145, 256));

  CHECK(sum_central_H_over_k1(0) == 0);
  CHECK(sum_central_H_over_k1(1) == make_rat(1, 8));
  CHECK(sum_central_H_over_k1(2) == make_rat(25, 128));

  CHECK(sum_alt_inv_sq(0) == 0);
  CHECK(sum_alt_inv_sq(1) == -1);
  CHECK(sum_alt_inv_sq(2) == make_rat(-3, 4));

  CHECK(sum_G_over_16(0) == 1);
  CHECK(sum_G_over_16(1) == make_rat(7, 4));
  CHECK(sum_G_over_16(2) == make_rat(153, 64));
}

TEST_CASE("partial sums match term-by-term oracles") {
  for (unsigned long m = 0; m <= 25; ++m) {
    CHECK(sum_central_H2(m) == oracle::sum_central_H2(m));
    CHECK(sum_central_H_over_k1(m) == oracle::sum_central_H_over_k1(m));
    CHECK(sum_alt_inv_sq(m) == oracle::sum_alt_inv_sq(m));
    CHECK(sum_G_over_16(m) == oracle::sum_G_over_16(m));
  }
}

TEST_CASE("p-integrality guard: denominators coprime to p across the sweep range") {
  for (std::uint64_t p : primes_in(5, 200)) {
    const unsigned long half = (p - 1) / 2;
    for (const BigRat& s :
         {sum_central_H2(half), sum_central_H_over_k1(half),
          sum_alt_inv_sq(half), sum_G_over_16(p - 1)}) {
      CHECK_FALSE(mpz_divisible_ui_p(s.get_den().get_mpz_t(), p));
    }
  }
}

TEST_CASE("SequenceCache invariants") {
  SequenceCache seq;
  for (unsigned long n = 0; n <= 30; ++n) CHECK(seq.g(n) == oracle::big_G(n));
  for (unsigned long n = 1; n <= 60; ++n)
    CHECK(seq.h(n) - seq.h(n - 1) == make_rat(1, n));
  for (unsigned long n = 0; n <= 31; ++n) {
    CHECK(seq.euler(n) == oracle::euler_number(n));
    if (n % 2 == 1) CHECK(seq.euler(n) == 0);
  }
  for (unsigned long k = 0; k <= 30; ++k)
    CHECK(seq.central_binomial(k) == binomial(2 * k, (long)k));
  // out-of-order access extends correctly
  SequenceCache fresh;
  CHECK(fresh.g(7) == az_G(7));
  CHECK(fresh.g(3) == az_G(3));
  CHECK(fresh.g(12) == az_G(12));
}
