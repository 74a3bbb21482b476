#pragma once

// Word-sized modular arithmetic used by the residue fast paths. All moduli
// here are < 2^63 so sums of two canonical values never wrap.

#include <cstdint>
#include <stdexcept>

namespace azkit::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid. Throws when gcd(a, m) != 1.
inline u64 inv_mod(u64 a, u64 m) {
  using i128 = __int128;
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace azkit::detail
