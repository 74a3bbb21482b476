#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include <azkit/exactnum.hpp>

#include "oracle.hpp"

using namespace azkit;

TEST_CASE("binomial small values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 3) == 20);  // 6*5*4/3!
  CHECK(binomial(6, 6) == 1);
}

TEST_CASE("binomial outside the triangle is zero") {
  CHECK(binomial(6, -1) == 0);
  CHECK(binomial(6, 7) == 0);
  CHECK(binomial(BigInt(5), BigInt(-2)) == 0);
  CHECK(binomial(BigInt(5), BigInt(9)) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial rejects negative n") {
  CHECK_THROWS_AS(binomial(BigInt(-1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(binomial(BigInt(-4), BigInt(2)), std::domain_error);
}

TEST_CASE("binomial matches additive Pascal oracle") {
  for (unsigned long n = 0; n <= 24; ++n)
    for (unsigned long k = 0; k <= n; ++k)
      CHECK(binomial(n, (long)k) == oracle::binomial(n, k));
}

TEST_CASE("Pascal recurrence and symmetry up to n = 64") {
  for (unsigned long n = 1; n <= 64; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      CHECK(binomial(n, (long)k) ==
            binomial(n - 1, (long)k - 1) + binomial(n - 1, (long)k));
      CHECK(binomial(n, (long)k) == binomial(n, (long)(n - k)));
    }
  }
}

TEST_CASE("ipow") {
  CHECK(ipow(4, 3ul) == 64);
  CHECK(ipow(0, 0ul) == 1);  // empty product
  CHECK(ipow(16, 5ul) == 1048576);
  CHECK(ipow(BigInt(-3), 3ul) == -27);
  CHECK(ipow(BigInt(2), BigInt(10)) == 1024);
  CHECK_THROWS_AS(ipow(BigInt(2), BigInt(-1)), std::domain_error);
}

TEST_CASE("rational field ops") {
  CHECK(rat_add(make_rat(1, 2), make_rat(1, 3)) == make_rat(5, 6));
  CHECK(rat_mul(make_rat(3, 4), make_rat(4, 3)) == 1);
  CHECK(rat_div(make_rat(11, 6), make_rat(1, 6)) == 11);
  CHECK(rat_neg(make_rat(2, 7)) == make_rat(-2, 7));
  CHECK_THROWS_AS(rat_div(make_rat(1, 2), BigRat(0)), std::domain_error);
}

TEST_CASE("make_rat canonicalizes") {
  BigRat r = make_rat(4, -6);
  CHECK(r.get_num() == -2);
  CHECK(r.get_den() == 3);
  CHECK(is_canonical(r));
  CHECK(make_rat(0, 5) == 0);
  CHECK(make_rat(0, 5).get_den() == 1);
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("stored form is unique under re-normalization") {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    BigRat a = make_rat(num(rng), den(rng));
    BigRat again = make_rat(a.get_num(), a.get_den());
    CHECK(a == again);
    CHECK(a.get_num() == again.get_num());
    CHECK(a.get_den() == again.get_den());
    CHECK(is_canonical(a));
  }
}

TEST_CASE("rational ops are commutative and associative") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> num(-300, 300);
  std::uniform_int_distribution<long> den(1, 300);
  for (int i = 0; i < 300; ++i) {
    BigRat a = make_rat(num(rng), den(rng));
    BigRat b = make_rat(num(rng), den(rng));
    BigRat c = make_rat(num(rng), den(rng));
    CHECK(rat_add(a, b) == rat_add(b, a));
    CHECK(rat_mul(a, b) == rat_mul(b, a));
    CHECK(rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c)));
    CHECK(rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c)));
  }
}

TEST_CASE("BinomialCache memoizes and agrees with binomial") {
  BinomialCache cache;
  for (unsigned long n = 0; n <= 40; ++n)
    for (unsigned long k = 0; k <= n; ++k)
      CHECK(cache.get(n, k) == binomial(n, (long)k));
  const std::size_t size_after_fill = cache.size();
  for (unsigned long n = 0; n <= 40; ++n)
    for (unsigned long k = 0; k <= n; ++k) cache.get(n, k);
  CHECK(cache.size() == size_after_fill);  // no growth on repeats
  CHECK(cache.get(10, 11) == 0);
}
