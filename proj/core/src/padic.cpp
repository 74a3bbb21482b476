#include "azkit/padic.hpp"

#include "azkit/primes.hpp"

namespace azkit {

PrimePowerModulus::PrimePowerModulus(BigInt p, unsigned m)
    : p_(std::move(p)), m_(m) {
  if (m_ < 1) throw std::domain_error("PrimePowerModulus: exponent must be >= 1");
  if (!is_prime(p_))
    throw NotPrime("PrimePowerModulus: " + p_.get_str() + " is not prime");
  modulus_ = ipow(p_, static_cast<unsigned long>(m_));
}

std::string PrimePowerModulus::str() const {
  return p_.get_str() + "^" + std::to_string(m_);
}

namespace {

BigInt canonical_mod(const BigInt& v, const BigInt& modulus) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("Residue: mixed moduli " + a.modulus().str() +
                                " and " + b.modulus().str());
}

}  // namespace

Residue::Residue(BigInt value, PrimePowerModulus mod)
    : value_(canonical_mod(value, mod.modulus())), mod_(std::move(mod)) {}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ + b.value_, a.mod_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ - b.value_, a.mod_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ * b.value_, a.mod_);
}

BigInt mod_inv(const BigInt& a, const BigInt& modulus) {
  BigInt out;
  if (!mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()))
    throw NotInvertible("mod_inv: " + a.get_str() + " has no inverse mod " +
                        modulus.get_str());
  return out;
}

Residue mod_inv(const Residue& a) {
  return Residue(mod_inv(a.value(), a.modulus().modulus()), a.modulus());
}

Residue reduce(const BigRat& r, const PrimePowerModulus& M) {
  const BigInt& den = r.get_den();
  if (mpz_divisible_p(den.get_mpz_t(), M.p().get_mpz_t()))
    throw DenominatorDivisibleByP("reduce: denominator of " + r.get_str() +
                                  " is divisible by " + M.p().get_str());
  if (den == 1) return Residue(r.get_num(), M);
  return Residue(r.get_num() * mod_inv(den, M.modulus()), M);
}

Residue reduce(const BigInt& n, const PrimePowerModulus& M) {
  return Residue(n, M);
}

long vp(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::domain_error("vp: valuation of 0 is infinite");
  BigInt stripped;
  return static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long vp(const BigRat& r, const BigInt& p) {
  if (r == 0) throw std::domain_error("vp: valuation of 0 is infinite");
  long v = vp(r.get_num(), p);
  return v - vp(r.get_den(), p);
}

bool congruent(const BigRat& a, const BigRat& b, const PrimePowerModulus& M) {
  if (a == b) return true;  // vp(0) is undefined; equality short-circuits
  BigRat diff = a - b;
  if (mpz_divisible_p(diff.get_den().get_mpz_t(), M.p().get_mpz_t()))
    throw DenominatorDivisibleByP("congruent: difference " + diff.get_str() +
                                  " is not " + M.p().get_str() + "-integral");
  return vp(diff, M.p()) >= static_cast<long>(M.exponent());
}

Residue mod_pow(const BigInt& base, const BigInt& exp,
                const PrimePowerModulus& M) {
  if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           M.modulus().get_mpz_t());
  return Residue(out, M);
}

}  // namespace azkit
