#include "azkit/sequences.hpp"

#include <stdexcept>

#include "modarith64.hpp"

namespace azkit {

namespace {

// Appends C(2k,k) for the next k via C(2k,k) = C(2k-2,k-1) * 2(2k-1)/k.
// The division is exact.
template <typename Container>
void extend_central(Container& central, unsigned long upto) {
  if (central.empty()) central.emplace_back(1);
  for (unsigned long k = central.size(); k <= upto; ++k) {
    BigInt next = central.back() * (2 * (2 * k - 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), k);
    central.push_back(std::move(next));
  }
}

// G_n from cached central binomials: sum_k c_k^2 * c_{n-k} * 4^{n-k},
// with 4^{n-k} applied as a shift by 2(n-k) bits.
template <typename Container>
BigInt g_from_central(const Container& central, unsigned long n) {
  BigInt total = 0, term;
  for (unsigned long k = 0; k <= n; ++k) {
    term = central[k] * central[k];
    term *= central[n - k];
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), 2 * (n - k));
    total += term;
  }
  return total;
}

}  // namespace

BigInt az_G(unsigned long n) {
  std::vector<BigInt> central;
  extend_central(central, n);
  return g_from_central(central, n);
}

BigRat harmonic(unsigned long n) {
  BigRat h = 0;
  for (unsigned long k = 1; k <= n; ++k) h += make_rat(1, k);
  return h;
}

BigInt euler_exact(unsigned long n) {
  if (n % 2 == 1) return 0;
  // E_{2m} = -sum_{j<m} C(2m,2j) E_{2j}, with the even binomial row updated
  // in place: C(2m,2j+2) = C(2m,2j) * (2m-2j)(2m-2j-1) / ((2j+1)(2j+2)).
  std::vector<BigInt> e{1};  // e[j] = E_{2j}
  for (unsigned long m = 1; 2 * m <= n; ++m) {
    BigInt c = 1;  // C(2m, 2j) as j runs
    BigInt acc = 0;
    for (unsigned long j = 0; j < m; ++j) {
      acc += c * e[j];
      c *= (2 * m - 2 * j) * (2 * m - 2 * j - 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), (2 * j + 1) * (2 * j + 2));
    }
    e.push_back(-acc);
  }
  return e[n / 2];
}

std::uint64_t euler_mod_u64(unsigned long n, std::uint64_t p) {
  using namespace detail;
  if (p < 2 || p >= (1ULL << 31))
    throw std::domain_error("euler_mod_u64: p out of range");
  if (n % 2 == 1) return 0;
  if (n == 0) return 1 % p;

  // Pascal rows mod p (addition only, so rows past p need no special
  // casing), consuming each even row as it completes.
  std::vector<u64> row{1 % p};
  std::vector<u64> e(n / 2 + 1);
  e[0] = 1 % p;
  row.reserve(n + 1);
  for (unsigned long r = 1; r <= n; ++r) {
    row.push_back(1 % p);
    for (unsigned long j = r - 1; j >= 1; --j)
      row[j] = add_mod(row[j], row[j - 1], p);
    if (r % 2 == 0) {
      unsigned long m = r / 2;
      u64 acc = 0;
      for (unsigned long j = 0; j < m; ++j)
        acc = add_mod(acc, mul_mod(row[2 * j], e[j], p), p);
      e[m] = acc == 0 ? 0 : p - acc;
    }
  }
  return e[n / 2];
}

Residue euler_mod(unsigned long n, const BigInt& p) {
  PrimePowerModulus M(p, 1);
  if (p.fits_ulong_p() && p.get_ui() < (1ULL << 31))
    return Residue(BigInt(euler_mod_u64(n, p.get_ui())), M);

  // Same row scheme over big integers, for moduli past the word engine.
  if (n % 2 == 1) return Residue(0, M);
  std::vector<BigInt> row{1};
  std::vector<BigInt> e(n / 2 + 1);
  e[0] = 1;
  for (unsigned long r = 1; r <= n; ++r) {
    row.emplace_back(1);
    for (unsigned long j = r - 1; j >= 1; --j) {
      row[j] += row[j - 1];
      mpz_mod(row[j].get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
    }
    if (r % 2 == 0) {
      unsigned long m = r / 2;
      BigInt acc = 0;
      for (unsigned long j = 0; j < m; ++j) acc += row[2 * j] * e[j];
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
      e[m] = acc == 0 ? BigInt(0) : BigInt(p - acc);
    }
  }
  return Residue(e[n / 2], M);
}

BigInt fermat_quotient2(const BigInt& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw NotPrime("fermat_quotient2: " + p.get_str() + " is not an odd prime");
  if (!p.fits_ulong_p())
    throw std::domain_error("fermat_quotient2: exponent too large");
  BigInt pow = ipow(2, p.get_ui() - 1) - 1;
  if (!mpz_divisible_p(pow.get_mpz_t(), p.get_mpz_t()))
    throw NotPrime("fermat_quotient2: 2^(p-1) - 1 not divisible by p = " +
                   p.get_str() + "; input is composite");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), pow.get_mpz_t(), p.get_mpz_t());
  return q;
}

// The four structured partial sums. Each carries its running pieces
// (H_k, C(2k,k), 16^k) forward exactly instead of recomputing them.

BigRat sum_central_H2(unsigned long m) {
  BigRat total = 0, h = 0;
  BigInt central = 1, pow16 = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    if (k > 0) {
      central = central * (2 * (2 * k - 1));
      mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), k);
      pow16 <<= 4;
      h += make_rat(1, k);
    }
    total += make_rat(central * central, pow16) * h * h;
  }
  return total;
}

BigRat sum_central_H_over_k1(unsigned long m) {
  BigRat total = 0, h = 0;
  BigInt central = 1, pow16 = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    if (k > 0) {
      central = central * (2 * (2 * k - 1));
      mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), k);
      pow16 <<= 4;
      h += make_rat(1, k);
    }
    total += make_rat(central * central, pow16 * (k + 1)) * h;
  }
  return total;
}

BigRat sum_alt_inv_sq(unsigned long m) {
  BigRat total = 0;
  for (unsigned long k = 1; k <= m; ++k) {
    BigRat term = make_rat(1, BigInt(k) * k);
    if (k % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

BigRat sum_G_over_16(unsigned long m) {
  std::vector<BigInt> central;
  extend_central(central, m);
  BigRat total = 0;
  BigInt pow16 = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    if (k > 0) pow16 <<= 4;
    total += make_rat(g_from_central(central, k), pow16);
  }
  return total;
}

const BigInt& SequenceCache::central_binomial(unsigned long k) {
  extend_central(central_, k);
  return central_[k];
}

const BigInt& SequenceCache::g(unsigned long n) {
  if (n >= g_.size()) {
    extend_central(central_, n);
    for (unsigned long i = g_.size(); i <= n; ++i)
      g_.push_back(g_from_central(central_, i));
  }
  return g_[n];
}

const BigRat& SequenceCache::h(unsigned long n) {
  if (h_.empty()) h_.emplace_back(0);
  for (unsigned long i = h_.size(); i <= n; ++i)
    h_.push_back(h_[i - 1] + make_rat(1, i));
  return h_[n];
}

const BigInt& SequenceCache::euler(unsigned long n) {
  if (euler_.empty()) euler_.emplace_back(1);
  for (unsigned long i = euler_.size(); i <= n; ++i) {
    if (i % 2 == 1) {
      euler_.emplace_back(0);
      continue;
    }
    unsigned long m = i / 2;
    BigInt c = 1, acc = 0;
    for (unsigned long j = 0; j < m; ++j) {
      acc += c * euler_[2 * j];
      c *= (2 * m - 2 * j) * (2 * m - 2 * j - 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), (2 * j + 1) * (2 * j + 2));
    }
    euler_.push_back(-acc);
  }
  return euler_[n];
}

}  // namespace azkit
