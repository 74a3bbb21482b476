#pragma once

#include <stdexcept>
#include <string>

#include "azkit/exactnum.hpp"

namespace azkit {

/// A modulus was constructed from a composite, or an operation that
/// requires a prime received one.
struct NotPrime : std::domain_error {
  using std::domain_error::domain_error;
};

/// A rational with p in its denominator was reduced mod p^m. Such a value
/// has no residue; congruences that hit this are ill-posed and must be
/// surfaced, never skipped.
struct DenominatorDivisibleByP : std::domain_error {
  using std::domain_error::domain_error;
};

/// Attempt to invert a residue divisible by p.
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

/// The congruence context: a verified prime p and an exponent m >= 1,
/// with modulus p^m.
class PrimePowerModulus {
 public:
  /// Throws NotPrime when p fails the deterministic primality test and
  /// std::domain_error when m < 1.
  PrimePowerModulus(BigInt p, unsigned m);

  const BigInt& p() const { return p_; }
  unsigned exponent() const { return m_; }
  const BigInt& modulus() const { return modulus_; }

  bool operator==(const PrimePowerModulus& o) const {
    return p_ == o.p_ && m_ == o.m_;
  }
  bool operator!=(const PrimePowerModulus& o) const { return !(*this == o); }

  /// "p^m", e.g. "5^3".
  std::string str() const;

 private:
  BigInt p_;
  unsigned m_;
  BigInt modulus_;
};

/// Canonical representative of a congruence class: value in [0, p^m).
/// Arithmetic requires both operands to share the same modulus.
class Residue {
 public:
  Residue(BigInt value, PrimePowerModulus mod);

  const BigInt& value() const { return value_; }
  const PrimePowerModulus& modulus() const { return mod_; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) {
    return !(a == b);
  }

 private:
  BigInt value_;
  PrimePowerModulus mod_;
};

/// Reduces a p-integral rational mod p^m: (num * den^-1) mod p^m.
/// Throws DenominatorDivisibleByP when p divides the denominator.
Residue reduce(const BigRat& r, const PrimePowerModulus& M);
Residue reduce(const BigInt& n, const PrimePowerModulus& M);

/// p-adic valuation of a nonzero integer / rational; negative when p
/// divides the denominator. Rejects 0 (whose valuation is infinite) with
/// std::domain_error: callers must branch on zero first.
long vp(const BigInt& n, const BigInt& p);
long vp(const BigRat& r, const BigInt& p);

/// True iff a - b == 0 or vp(a - b) >= m; equivalent to
/// reduce(a, M) == reduce(b, M). Throws DenominatorDivisibleByP when
/// a - b is not p-integral.
bool congruent(const BigRat& a, const BigRat& b, const PrimePowerModulus& M);

/// base^exp mod p^m by square-and-multiply. exp must be >= 0.
Residue mod_pow(const BigInt& base, const BigInt& exp,
                const PrimePowerModulus& M);

/// Multiplicative inverse mod p^m. Throws NotInvertible when p | a.
Residue mod_inv(const Residue& a);
BigInt mod_inv(const BigInt& a, const BigInt& modulus);

}  // namespace azkit
