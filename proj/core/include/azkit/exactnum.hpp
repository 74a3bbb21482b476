#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>

namespace azkit {

/// Arbitrary-precision signed integer. Exact: no overflow, no rounding.
using BigInt = mpz_class;

/// Exact rational number. Values produced by this library are always
/// canonical: denominator >= 1, gcd(|num|, den) = 1, zero stored as 0/1.
using BigRat = mpq_class;

/// Builds the canonical rational num/den. Throws std::domain_error when
/// den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// True when r is stored in canonical form (den >= 1, lowest terms).
bool is_canonical(const BigRat& r);

/// Binomial coefficient C(n, k), computed exactly over integers.
/// Returns 0 outside 0 <= k <= n so summations can run unguarded.
/// Throws std::domain_error for n < 0.
BigInt binomial(const BigInt& n, const BigInt& k);
BigInt binomial(unsigned long n, long k);

/// base^exp, exact. ipow(b, 0) == 1 for every b, including 0.
/// Throws std::domain_error for exp < 0.
BigInt ipow(const BigInt& base, const BigInt& exp);
BigInt ipow(const BigInt& base, unsigned long exp);

/// Exact field operations on canonical rationals. rat_div throws
/// std::domain_error on a zero divisor; the rest never fail.
BigRat rat_add(const BigRat& a, const BigRat& b);
BigRat rat_mul(const BigRat& a, const BigRat& b);
BigRat rat_neg(const BigRat& a);
BigRat rat_div(const BigRat& a, const BigRat& b);

/// Memoizing binomial cache for loops that revisit (n, k) pairs. The cache
/// grows with the largest n requested, so callers bound it by the largest
/// prime they sweep. Not synchronized: instantiate one per worker.
class BinomialCache {
 public:
  const BigInt& get(unsigned long n, unsigned long k);
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<std::pair<unsigned long, unsigned long>, BigInt> cache_;
};

}  // namespace azkit
