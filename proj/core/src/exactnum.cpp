#include "azkit/exactnum.hpp"

#include <stdexcept>

namespace azkit {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

bool is_canonical(const BigRat& r) {
  if (r.get_den() < 1) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return g == 1;
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

BigInt ipow(const BigInt& base, const BigInt& exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  if (!exp.fits_ulong_p())
    throw std::domain_error("ipow: exponent too large");
  return ipow(base, exp.get_ui());
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

BigRat rat_add(const BigRat& a, const BigRat& b) { return a + b; }

BigRat rat_mul(const BigRat& a, const BigRat& b) { return a * b; }

BigRat rat_neg(const BigRat& a) { return -a; }

BigRat rat_div(const BigRat& a, const BigRat& b) {
  if (b == 0) throw std::domain_error("rat_div: division by zero");
  return a / b;
}

const BigInt& BinomialCache::get(unsigned long n, unsigned long k) {
  // C(n,k) = C(n,n-k): cache the smaller index.
  if (k > n) {
    static const BigInt zero = 0;
    return zero;
  }
  unsigned long kk = std::min(k, n - k);
  auto it = cache_.find({n, kk});
  if (it == cache_.end()) {
    it = cache_.emplace(std::make_pair(n, kk), binomial(n, (long)kk)).first;
  }
  return it->second;
}

}  // namespace azkit
