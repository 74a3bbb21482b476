#include "azkit/primes.hpp"

#include <stdexcept>

namespace azkit {

namespace {

constexpr unsigned long kWitnesses[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long w : kWitnesses) {
    if (n == w) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
  }
  // n is odd and > 37 here. Write n - 1 = d * 2^s with d odd.
  BigInt d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  BigInt x, base, nm1 = n - 1;
  for (unsigned long w : kWitnesses) {
    base = w;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness_says_composite = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == nm1) {
        witness_says_composite = false;
        break;
      }
    }
    if (witness_says_composite) return false;
  }
  return true;
}

bool is_prime(std::uint64_t n) { return is_prime(BigInt(n)); }

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo || hi < 2) return out;
  if (hi > 1'000'000'000ULL)
    throw std::invalid_argument("primes_in: range end too large to sieve");

  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i] && is_prime(i)) out.push_back(i);
  }
  return out;
}

}  // namespace azkit
