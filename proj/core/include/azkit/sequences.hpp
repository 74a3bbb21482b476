#pragma once

#include <cstdint>
#include <deque>

#include "azkit/exactnum.hpp"
#include "azkit/padic.hpp"

namespace azkit {

/// G_n = sum_{k=0}^{n} C(2k,k)^2 C(2n-2k,n-k) 4^{n-k}, evaluated exactly
/// from the defining sum. Always a positive integer.
BigInt az_G(unsigned long n);

/// Harmonic number H_n = sum_{k=1}^{n} 1/k; H_0 = 0.
BigRat harmonic(unsigned long n);

/// Euler number E_n, the coefficient of x^n/n! in 2/(e^x + e^{-x}).
/// E_n = 0 for odd n; even indices follow from E_0 = 1 and
/// sum_{j=0}^{m} C(2m,2j) E_{2j} = 0 for m >= 1.
BigInt euler_exact(unsigned long n);

/// E_n mod p, computed by running the defining recurrence entirely in
/// residue arithmetic (Pascal rows mod p; no big intermediates).
Residue euler_mod(unsigned long n, const BigInt& p);

/// Word-sized engine behind euler_mod, usable on its own in hot loops.
/// Requires p < 2^31.
std::uint64_t euler_mod_u64(unsigned long n, std::uint64_t p);

/// Fermat quotient q_p(2) = (2^{p-1} - 1)/p for an odd prime p. The
/// division is exact for primes; a non-exact division signals a composite
/// input and raises NotPrime.
BigInt fermat_quotient2(const BigInt& p);

/// sum_{k=0}^{m} C(2k,k)^2 / 16^k * H_k^2
BigRat sum_central_H2(unsigned long m);

/// sum_{k=0}^{m} C(2k,k)^2 / (16^k (k+1)) * H_k
BigRat sum_central_H_over_k1(unsigned long m);

/// sum_{k=1}^{m} (-1)^k / k^2   (0 when m == 0)
BigRat sum_alt_inv_sq(unsigned long m);

/// sum_{k=0}^{m} G_k / 16^k
BigRat sum_G_over_16(unsigned long m);

/// Incrementally extended caches of G_n, H_n and E_n, plus the central
/// binomials C(2k,k) they are built from. Running values are carried
/// forward exactly, so extending by one index costs O(n) integer work.
/// Returned references stay valid while the cache lives, including across
/// later extensions. Not synchronized: instantiate one per worker.
class SequenceCache {
 public:
  /// G_n (extends the cache as needed).
  const BigInt& g(unsigned long n);
  /// H_n.
  const BigRat& h(unsigned long n);
  /// E_n.
  const BigInt& euler(unsigned long n);
  /// C(2k,k).
  const BigInt& central_binomial(unsigned long k);

  std::size_t g_size() const { return g_.size(); }

 private:
  std::deque<BigInt> g_;
  std::deque<BigRat> h_;        // h_[n] = H_n
  std::deque<BigInt> euler_;    // all indices, odd entries zero
  std::deque<BigInt> central_;  // central_[k] = C(2k,k)
};

}  // namespace azkit
