#include "azkit/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <optional>
#include <thread>

#include "azkit/primes.hpp"
#include "modarith64.hpp"

namespace azkit {

unsigned modulus_exponent(CheckId id) {
  switch (id) {
    case CheckId::A1:
    case CheckId::A2:
    case CheckId::A4:
    case CheckId::A5:
      return 3;
    default:
      return 1;
  }
}

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::A1: return "A1";
    case CheckId::A2: return "A2";
    case CheckId::A4: return "A4";
    case CheckId::A5: return "A5";
    case CheckId::NEW1: return "NEW1";
    case CheckId::B2: return "B2";
    case CheckId::B3: return "B3";
    case CheckId::B4: return "B4";
    case CheckId::B5: return "B5";
    case CheckId::C3: return "C3";
  }
  return "?";
}

std::optional<CheckId> parse_check_id(std::string_view s) {
  std::string up(s);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (CheckId id : kAllChecks)
    if (up == to_string(id)) return id;
  return std::nullopt;
}

std::string to_string(IdentityId id) {
  return id == IdentityId::IB1 ? "IB1" : "IC1";
}

std::optional<IdentityId> parse_identity_id(std::string_view s) {
  std::string up(s);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (up == "IB1") return IdentityId::IB1;
  if (up == "IC1") return IdentityId::IC1;
  return std::nullopt;
}

std::vector<CheckResult> SweepReport::failures() const {
  std::vector<CheckResult> out;
  for (const auto& r : results)
    if (!r.passed) out.push_back(r);
  return out;
}

std::size_t SweepReport::passed_count() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 1 : 0;
  return n;
}

namespace {

using detail::add_mod;
using detail::inv_mod;
using detail::mul_mod;
using detail::pow_mod;
using detail::sub_mod;
using detail::u64;

u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

// Both evaluation paths produce the two sides as canonical integers in
// [0, p^m); the paths must agree residue-for-residue.
struct EvalOut {
  BigInt lhs;
  BigInt rhs;
  bool passed = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Fast path: everything in word-sized residue arithmetic.
// ---------------------------------------------------------------------------

// The mod-p^3 sums run the central binomial C(2k,k) past k = p/2, where it
// picks up a factor of p and stops being invertible. Each value is therefore
// carried as unit * p^exp with p not dividing unit; for k <= p-1 the exponent
// is at most 1 (a single base-p carry in k + k).
struct Valued {
  u64 unit;
  unsigned exp;
};

// All word-sized per-prime state, built layer by layer on demand.
class FastPrime {
 public:
  explicit FastPrime(u64 p) : p_(p), half_((p - 1) / 2) {}

  static bool fits(u64 p, unsigned m) {
    return m == 3 ? p < (1ULL << 21) : p < (1ULL << 31);
  }

  u64 p() const { return p_; }
  u64 half() const { return half_; }
  bool sign_positive() const { return half_ % 2 == 0; }

  // inv[i] = i^{-1} mod p for 1 <= i <= half+2
  const std::vector<u64>& inv() {
    ensure_base();
    return inv_;
  }
  const std::vector<u64>& h() {
    ensure_base();
    return h_;
  }
  const std::vector<u64>& cb() {
    ensure_base();
    return cb_;
  }
  u64 inv16() {
    ensure_base();
    return inv16_;
  }

  u64 sum_h2() {
    ensure_sums();
    return s_h2_;
  }
  u64 sum_hk1() {
    ensure_sums();
    return s_hk1_;
  }
  u64 sum_alt() {
    ensure_sums();
    return s_alt_;
  }

  u64 euler() {
    if (!euler_) euler_ = euler_mod_u64(static_cast<unsigned long>(p_ - 3), p_);
    return *euler_;
  }

  // q_p(2) mod p, from 2^{p-1} = 1 + a*p (mod p^2).
  u64 fermat_q() {
    if (!q_) {
      u64 p2 = p_ * p_;
      u64 x = pow_mod(2, p_ - 1, p2);
      q_ = ((x - 1) / p_) % p_;
    }
    return *q_;
  }

  u64 p3() {
    ensure_p3();
    return p3_;
  }
  u64 pow256() {
    ensure_p3();
    return pow256_;
  }
  // (-1)^{(p-1)/2} as a residue mod p^3
  u64 sign3() {
    ensure_p3();
    return sign3_;
  }

  // G_{p-1} mod p^3
  u64 g_last() {
    ensure_p3();
    if (!g_last_) g_last_ = g_mod_p3(p_ - 1);
    return *g_last_;
  }

  // sum_{k=0}^{p-1} G_k/16^k mod p^3
  u64 g16_sum() {
    ensure_p3();
    if (!g16_sum_) {
      u64 acc = 0, invpw = 1;
      u64 inv16_3 = inv_mod(16, p3_);
      for (u64 k = 0; k + 1 <= p_; ++k) {
        acc = add_mod(acc, mul_mod(g_mod_p3(k), invpw, p3_), p3_);
        invpw = mul_mod(invpw, inv16_3, p3_);
      }
      g16_sum_ = acc;
    }
    return *g16_sum_;
  }

 private:
  void ensure_base() {
    if (!inv_.empty()) return;
    u64 p = p_;
    std::size_t n = static_cast<std::size_t>(half_) + 3;
    inv_.assign(n, 0);
    inv_[1] = 1;
    for (std::size_t i = 2; i < n; ++i)
      inv_[i] = p - mul_mod(p / i, inv_[p % i], p);

    h_.assign(half_ + 1, 0);
    cb_.assign(half_ + 1, 1 % p);
    for (u64 k = 1; k <= half_; ++k) {
      h_[k] = add_mod(h_[k - 1], inv_[k], p);
      cb_[k] = mul_mod(cb_[k - 1], mul_mod((2 * (2 * k - 1)) % p, inv_[k], p), p);
    }
    inv16_ = inv_mod(16 % p, p);
  }

  void ensure_sums() {
    if (sums_done_) return;
    ensure_base();
    u64 p = p_;
    u64 s_h2 = 0, s_hk1 = 0, s_alt = 0, invpw = 1;
    for (u64 k = 0; k <= half_; ++k) {
      u64 cb2 = mul_mod(cb_[k], cb_[k], p);
      u64 w = mul_mod(cb2, invpw, p);
      s_h2 = add_mod(s_h2, mul_mod(w, mul_mod(h_[k], h_[k], p), p), p);
      s_hk1 = add_mod(s_hk1, mul_mod(w, mul_mod(inv_[k + 1], h_[k], p), p), p);
      if (k >= 1) {
        u64 t = mul_mod(inv_[k], inv_[k], p);
        s_alt = k % 2 == 1 ? sub_mod(s_alt, t, p) : add_mod(s_alt, t, p);
      }
      invpw = mul_mod(invpw, inv16_, p);
    }
    s_h2_ = s_h2;
    s_hk1_ = s_hk1;
    s_alt_ = s_alt;
    sums_done_ = true;
  }

  void ensure_p3() {
    if (p3_ != 0) return;
    p3_ = p_ * p_ * p_;
    sign3_ = sign_positive() ? 1 : p3_ - 1;
    pow256_ = pow_mod(256, p_ - 1, p3_);
    pow_p_[0] = 1;
    pow_p_[1] = p_;
    pow_p_[2] = p_ * p_;

    // C(2k,k) and 4^k mod p^3 for k <= p-1
    cb3_.assign(p_, Valued{1, 0});
    pow4_.assign(p_, 1);
    for (u64 k = 1; k + 1 <= p_; ++k) {
      Valued v = cb3_[k - 1];
      u64 num = 2 * (2 * k - 1);
      while (num % p_ == 0) {
        num /= p_;
        ++v.exp;
      }
      v.unit = mul_mod(v.unit, num % p3_, p3_);
      v.unit = mul_mod(v.unit, inv_mod(k % p3_, p3_), p3_);
      cb3_[k] = v;
      pow4_[k] = mul_mod(pow4_[k - 1], 4, p3_);
    }
  }

  u64 value_of(u64 unit, unsigned exp) const {
    return exp >= 3 ? 0 : mul_mod(unit, pow_p_[exp], p3_);
  }

  u64 g_mod_p3(u64 n) const {
    u64 acc = 0;
    for (u64 k = 0; k <= n; ++k) {
      const Valued& a = cb3_[k];
      const Valued& b = cb3_[n - k];
      unsigned exp = 2 * a.exp + b.exp;
      if (exp >= 3) continue;
      u64 unit = mul_mod(mul_mod(a.unit, a.unit, p3_), b.unit, p3_);
      unit = mul_mod(unit, pow4_[n - k], p3_);
      acc = add_mod(acc, value_of(unit, exp), p3_);
    }
    return acc;
  }

  u64 p_, half_;
  std::vector<u64> inv_, h_, cb_;
  u64 inv16_ = 0;
  bool sums_done_ = false;
  u64 s_h2_ = 0, s_hk1_ = 0, s_alt_ = 0;
  std::optional<u64> euler_, q_, g_last_, g16_sum_;
  u64 p3_ = 0, sign3_ = 0, pow256_ = 0;
  u64 pow_p_[3] = {1, 1, 1};
  std::vector<Valued> cb3_;
  std::vector<u64> pow4_;
};

EvalOut eval_fast(CheckId id, FastPrime& f) {
  const u64 p = f.p();
  const bool pos = f.sign_positive();
  auto signed_mod_p = [&](u64 v) { return pos ? v : neg_mod(v, p); };

  EvalOut out;
  switch (id) {
    case CheckId::A1: {
      u64 p3 = f.p3();
      // payload of the p^2 term, mod p
      u64 x = mul_mod(f.sum_h2(), f.inv()[2], p);
      x = add_mod(x, f.euler(), p);
      u64 q2 = mul_mod(f.fermat_q(), f.fermat_q(), p);
      u64 eight_q2 = mul_mod(8 % p, q2, p);
      x = pos ? sub_mod(x, eight_q2, p) : add_mod(x, eight_q2, p);
      u64 rhs = add_mod(mul_mod(f.sign3(), f.pow256(), p3),
                        mul_mod(x, p * p, p3), p3);
      out.lhs = f.g_last();
      out.rhs = rhs;
      break;
    }
    case CheckId::A2: {
      u64 p3 = f.p3();
      u64 x = sub_mod(1 % p, f.sum_hk1(), p);
      out.lhs = f.g16_sum();
      out.rhs = mul_mod(x, p * p, p3);
      break;
    }
    case CheckId::A4: {
      u64 p3 = f.p3();
      u64 x = mul_mod(3 % p, f.euler(), p);
      out.lhs = f.g_last();
      out.rhs = add_mod(mul_mod(f.sign3(), f.pow256(), p3),
                        mul_mod(x, p * p, p3), p3);
      break;
    }
    case CheckId::A5: {
      u64 p3 = f.p3();
      u64 x = pos ? 1 % p : (p - 7 % p) % p;  // (4s - 3) mod p
      out.lhs = f.g16_sum();
      out.rhs = mul_mod(x, p * p, p3);
      break;
    }
    case CheckId::NEW1: {
      const auto& inv = f.inv();
      const auto& cb = f.cb();
      u64 n = f.half();
      u64 c1 = 1 % p, c2 = 1 % p, invpw = 1 % p;
      u64 lhs_sum = 0, rhs_sum = 0;
      bool all_ok = true;
      for (u64 k = 0; k <= n; ++k) {
        if (k > 0) {
          c1 = mul_mod(c1, mul_mod((n - k + 1) % p, inv[k], p), p);
          c2 = mul_mod(c2, mul_mod((n + k) % p, inv[k], p), p);
          invpw = mul_mod(invpw, f.inv16(), p);
        }
        u64 lhs_k = mul_mod(c1, c2, p);
        if (k % 2 == 1) lhs_k = neg_mod(lhs_k, p);
        u64 rhs_k = mul_mod(mul_mod(cb[k], cb[k], p), invpw, p);
        if (lhs_k != rhs_k && all_ok) {
          all_ok = false;
          out.detail = "first failing k=" + std::to_string(k);
        }
        lhs_sum = add_mod(lhs_sum, lhs_k, p);
        rhs_sum = add_mod(rhs_sum, rhs_k, p);
      }
      out.lhs = lhs_sum;
      out.rhs = rhs_sum;
      out.passed = all_ok;
      return out;
    }
    case CheckId::B2: {
      u64 hh = f.h()[f.half()];
      u64 t = add_mod(mul_mod(2 % p, mul_mod(hh, hh, p), p), f.sum_alt(), p);
      out.lhs = f.sum_h2();
      out.rhs = signed_mod_p(mul_mod(2 % p, t, p));
      break;
    }
    case CheckId::B3: {
      out.lhs = f.h()[f.half()];
      out.rhs = neg_mod(mul_mod(2 % p, f.fermat_q(), p), p);
      break;
    }
    case CheckId::B4: {
      out.lhs = f.sum_alt();
      out.rhs = signed_mod_p(mul_mod(2 % p, f.euler(), p));
      break;
    }
    case CheckId::B5: {
      u64 q2 = mul_mod(f.fermat_q(), f.fermat_q(), p);
      u64 t = signed_mod_p(mul_mod(16 % p, q2, p));
      out.lhs = f.sum_h2();
      out.rhs = add_mod(t, mul_mod(4 % p, f.euler(), p), p);
      break;
    }
    case CheckId::C3: {
      out.lhs = f.sum_hk1();
      out.rhs = pos ? 0 : 8 % p;  // 4(1 - s) mod p
      break;
    }
  }
  out.passed = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Exact path: big-rational sums, reduced once at the end.
// ---------------------------------------------------------------------------

class ExactPrime {
 public:
  ExactPrime(u64 p, const PrimePowerModulus& m1, const PrimePowerModulus* m3)
      : p_(p), half_((p - 1) / 2), m1_(m1), m3_(m3) {}

  u64 p() const { return p_; }
  u64 half() const { return half_; }
  int sign() const { return half_ % 2 == 0 ? 1 : -1; }
  const PrimePowerModulus& m1() const { return m1_; }
  const PrimePowerModulus& m3() const { return *m3_; }
  SequenceCache& seq() { return seq_; }

  const BigRat& sum_h2() {
    if (!s_h2_) s_h2_ = sum_central_H2(half_);
    return *s_h2_;
  }
  const BigRat& sum_hk1() {
    if (!s_hk1_) s_hk1_ = sum_central_H_over_k1(half_);
    return *s_hk1_;
  }
  const BigRat& sum_alt() {
    if (!s_alt_) s_alt_ = sum_alt_inv_sq(half_);
    return *s_alt_;
  }
  const BigRat& g16_sum() {
    if (!g16_) g16_ = sum_G_over_16(p_ - 1);
    return *g16_;
  }
  // E_{p-3} mod p, lifted to [0, p). The lift choice cannot matter: the
  // value is only ever multiplied by p^2 inside a mod-p^3 congruence.
  const BigInt& euler_lift() {
    if (!euler_) euler_ = euler_mod(static_cast<unsigned long>(p_ - 3), p_).value();
    return *euler_;
  }
  const BigInt& fermat_q() {
    if (!q_) q_ = fermat_quotient2(BigInt(static_cast<unsigned long>(p_)));
    return *q_;
  }
  const BigInt& p_squared() {
    if (!p2_) p2_ = BigInt(static_cast<unsigned long>(p_)) *
                    BigInt(static_cast<unsigned long>(p_));
    return *p2_;
  }

 private:
  u64 p_, half_;
  PrimePowerModulus m1_;
  const PrimePowerModulus* m3_;
  SequenceCache seq_;
  std::optional<BigRat> s_h2_, s_hk1_, s_alt_, g16_;
  std::optional<BigInt> euler_, q_, p2_;
};

EvalOut eval_exact(CheckId id, ExactPrime& e) {
  const unsigned long n_last = static_cast<unsigned long>(e.p() - 1);
  EvalOut out;
  switch (id) {
    case CheckId::A1: {
      const BigInt q2 = e.fermat_q() * e.fermat_q();
      BigRat payload = BigRat(e.euler_lift()) + e.sum_h2() / 2;
      payload += BigRat(-8 * e.sign()) * BigRat(q2);
      BigRat rhs = BigRat(e.sign()) * BigRat(ipow(256, n_last)) +
                   BigRat(e.p_squared()) * payload;
      out.lhs = reduce(e.seq().g(n_last), e.m3()).value();
      out.rhs = reduce(rhs, e.m3()).value();
      break;
    }
    case CheckId::A2: {
      BigRat rhs = BigRat(e.p_squared()) * (BigRat(1) - e.sum_hk1());
      out.lhs = reduce(e.g16_sum(), e.m3()).value();
      out.rhs = reduce(rhs, e.m3()).value();
      break;
    }
    case CheckId::A4: {
      const BigInt euler_term = 3 * e.p_squared() * e.euler_lift();
      BigRat rhs = BigRat(e.sign()) * BigRat(ipow(256, n_last)) +
                   BigRat(euler_term);
      out.lhs = reduce(e.seq().g(n_last), e.m3()).value();
      out.rhs = reduce(rhs, e.m3()).value();
      break;
    }
    case CheckId::A5: {
      BigRat rhs = BigRat(e.p_squared()) * BigRat(4 * e.sign() - 3);
      out.lhs = reduce(e.g16_sum(), e.m3()).value();
      out.rhs = reduce(rhs, e.m3()).value();
      break;
    }
    case CheckId::NEW1: {
      const BigInt& pz = e.m1().p();
      const unsigned long n = static_cast<unsigned long>(e.half());
      BigInt c1 = 1, c2 = 1, pow16 = 1;
      BigInt lhs_sum = 0, rhs_sum = 0;
      bool all_ok = true;
      for (unsigned long k = 0; k <= n; ++k) {
        if (k > 0) {
          c1 *= n - k + 1;
          mpz_divexact_ui(c1.get_mpz_t(), c1.get_mpz_t(), k);
          c2 *= n + k;
          mpz_divexact_ui(c2.get_mpz_t(), c2.get_mpz_t(), k);
          pow16 <<= 4;
        }
        BigInt lhs_term = c1 * c2;
        if (k % 2 == 1) lhs_term = -lhs_term;
        const BigInt& cbk = e.seq().central_binomial(k);
        Residue lhs_k = reduce(lhs_term, e.m1());
        Residue rhs_k = reduce(make_rat(cbk * cbk, pow16), e.m1());
        if (lhs_k != rhs_k && all_ok) {
          all_ok = false;
          out.detail = "first failing k=" + std::to_string(k);
        }
        lhs_sum = (lhs_sum + lhs_k.value()) % pz;
        rhs_sum = (rhs_sum + rhs_k.value()) % pz;
      }
      out.lhs = lhs_sum;
      out.rhs = rhs_sum;
      out.passed = all_ok;
      return out;
    }
    case CheckId::B2: {
      const BigRat& hh = e.seq().h(static_cast<unsigned long>(e.half()));
      BigRat rhs = BigRat(2 * e.sign()) * (2 * hh * hh + e.sum_alt());
      out.lhs = reduce(e.sum_h2(), e.m1()).value();
      out.rhs = reduce(rhs, e.m1()).value();
      break;
    }
    case CheckId::B3: {
      const BigInt t = -2 * e.fermat_q();
      out.lhs = reduce(e.seq().h(static_cast<unsigned long>(e.half())), e.m1()).value();
      out.rhs = reduce(BigRat(t), e.m1()).value();
      break;
    }
    case CheckId::B4: {
      const BigInt t = 2 * e.sign() * e.euler_lift();
      out.lhs = reduce(e.sum_alt(), e.m1()).value();
      out.rhs = reduce(BigRat(t), e.m1()).value();
      break;
    }
    case CheckId::B5: {
      const BigInt t =
          16 * e.sign() * e.fermat_q() * e.fermat_q() + 4 * e.euler_lift();
      out.lhs = reduce(e.sum_h2(), e.m1()).value();
      out.rhs = reduce(BigRat(t), e.m1()).value();
      break;
    }
    case CheckId::C3: {
      BigRat rhs(4 * (1 - e.sign()));
      out.lhs = reduce(e.sum_hk1(), e.m1()).value();
      out.rhs = reduce(rhs, e.m1()).value();
      break;
    }
  }
  out.passed = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Per-prime evaluator shared by run_check, run_consistency and sweep.
// ---------------------------------------------------------------------------

class PrimeEvaluator {
 public:
  PrimeEvaluator(u64 p, EvalPath path) : p_(p), path_(path) {
    if (!is_prime(p))
      throw NotPrime("run_check: " + std::to_string(p) + " is not prime");
    if (p < 5)
      throw PrimeTooSmall("congruence checks require p >= 5, got " +
                          std::to_string(p));
    m1_.emplace(BigInt(static_cast<unsigned long>(p)), 1);
  }

  EvalOut eval(CheckId id) {
    try {
      switch (path_) {
        case EvalPath::Fast:
          return FastPrime::fits(p_, modulus_exponent(id)) ? fast(id)
                                                           : exact(id);
        case EvalPath::Exact:
          return exact(id);
        case EvalPath::Both: {
          EvalOut e = exact(id);
          if (!FastPrime::fits(p_, modulus_exponent(id))) return e;
          EvalOut f = fast(id);
          if (e.lhs != f.lhs || e.rhs != f.rhs || e.passed != f.passed) {
            EvalOut bad = e;
            bad.passed = false;
            bad.detail = "path mismatch: exact lhs=" + e.lhs.get_str() +
                         " rhs=" + e.rhs.get_str() +
                         "; fast lhs=" + f.lhs.get_str() +
                         " rhs=" + f.rhs.get_str();
            return bad;
          }
          return e;
        }
      }
      throw std::logic_error("unreachable");
    } catch (const DenominatorDivisibleByP& ex) {
      throw IllPosed("check " + to_string(id) + " at p=" + std::to_string(p_) +
                     " is ill-posed: " + ex.what());
    } catch (const NotInvertible& ex) {
      throw IllPosed("check " + to_string(id) + " at p=" + std::to_string(p_) +
                     " is ill-posed: " + ex.what());
    }
  }

  CheckResult result(CheckId id) {
    EvalOut out = eval(id);
    const unsigned m = modulus_exponent(id);
    const PrimePowerModulus& M = m == 3 ? m3() : *m1_;
    return CheckResult{id,
                       p_,
                       m,
                       Residue(out.lhs, M),
                       Residue(out.rhs, M),
                       out.passed,
                       std::move(out.detail)};
  }

 private:
  EvalOut fast(CheckId id) {
    if (!fast_) fast_.emplace(p_);
    return eval_fast(id, *fast_);
  }
  EvalOut exact(CheckId id) {
    if (!exact_) exact_.emplace(p_, *m1_, &m3());
    return eval_exact(id, *exact_);
  }
  const PrimePowerModulus& m3() {
    if (!m3_) m3_.emplace(BigInt(static_cast<unsigned long>(p_)), 3);
    return *m3_;
  }

  u64 p_;
  EvalPath path_;
  std::optional<PrimePowerModulus> m1_, m3_;
  std::optional<FastPrime> fast_;
  std::optional<ExactPrime> exact_;
};

std::vector<CheckId> canonical_ids(const std::vector<CheckId>& ids) {
  std::vector<CheckId> out = ids;
  std::sort(out.begin(), out.end(), [](CheckId a, CheckId b) {
    return static_cast<int>(a) < static_cast<int>(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CheckResult run_check(CheckId id, std::uint64_t p, EvalPath path) {
  PrimeEvaluator ev(p, path);
  return ev.result(id);
}

bool run_identity(IdentityId id, unsigned long n) {
  if (id == IdentityId::IC1 && n == 0)
    throw std::domain_error(
        "IC1 at n = 0 is indeterminate (0/0 on the right side)");

  BigInt c1 = 1, c2 = 1;  // C(n,k), C(n+k,k)
  BigRat h = 0, lhs = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) {
      c1 *= n - k + 1;
      mpz_divexact_ui(c1.get_mpz_t(), c1.get_mpz_t(), k);
      c2 *= n + k;
      mpz_divexact_ui(c2.get_mpz_t(), c2.get_mpz_t(), k);
      h += make_rat(1, k);
    }
    BigInt prod = c1 * c2;
    if (k % 2 == 1) prod = -prod;
    if (id == IdentityId::IB1) {
      lhs += BigRat(prod) * h * h;
    } else {
      lhs += make_rat(prod, k + 1) * h;
    }
  }

  const int sign_n = n % 2 == 0 ? 1 : -1;
  BigRat rhs;
  if (id == IdentityId::IB1) {
    rhs = BigRat(2 * sign_n) * (2 * harmonic(n) * harmonic(n) + sum_alt_inv_sq(n));
  } else {
    rhs = make_rat(sign_n - 1, BigInt(n) * (n + 1));
  }
  return lhs == rhs;
}

ConsistencyResult run_consistency_detail(std::uint64_t p, EvalPath path) {
  PrimeEvaluator ev(p, path);
  const BigInt rhs_a1 = ev.eval(CheckId::A1).rhs;
  const BigInt rhs_a4 = ev.eval(CheckId::A4).rhs;
  const BigInt rhs_a2 = ev.eval(CheckId::A2).rhs;
  const BigInt rhs_a5 = ev.eval(CheckId::A5).rhs;
  return ConsistencyResult{p, rhs_a1 == rhs_a4, rhs_a2 == rhs_a5};
}

bool run_consistency(std::uint64_t p, EvalPath path) {
  return run_consistency_detail(p, path).passed();
}

std::vector<ConsistencyResult> consistency_sweep(std::uint64_t pmin,
                                                 std::uint64_t pmax,
                                                 unsigned workers,
                                                 EvalPath path) {
  if (pmin < 5)
    throw PrimeTooSmall("consistency sweep requires pmin >= 5, got " +
                        std::to_string(pmin));
  if (pmin > pmax) throw std::invalid_argument("consistency sweep: pmin > pmax");
  if (workers < 1)
    throw std::invalid_argument("consistency sweep: workers must be >= 1");

  const std::vector<std::uint64_t> ps = primes_in(pmin, pmax);
  std::vector<ConsistencyResult> out(ps.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;
  std::mutex error_mu;

  auto drain = [&] {
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ps.size()) break;
      try {
        out[i] = run_consistency_detail(ps[i], path);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        abort.store(true, std::memory_order_relaxed);
      }
    }
  };

  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(ps.size(), 1)));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

SweepReport sweep(std::uint64_t pmin, std::uint64_t pmax,
                  const std::vector<CheckId>& ids, unsigned workers,
                  EvalPath path) {
  const auto t0 = std::chrono::steady_clock::now();
  if (pmin < 5)
    throw PrimeTooSmall("sweep requires pmin >= 5, got " + std::to_string(pmin));
  if (pmin > pmax) throw std::invalid_argument("sweep: pmin > pmax");
  if (ids.empty()) throw std::invalid_argument("sweep: no checks requested");
  if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");

  SweepReport report;
  report.pmin = pmin;
  report.pmax = pmax;
  report.checks = canonical_ids(ids);

  const std::vector<std::uint64_t> ps = primes_in(pmin, pmax);
  std::vector<std::vector<CheckResult>> slots(ps.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;
  std::mutex error_mu;

  auto drain = [&] {
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ps.size()) break;
      try {
        PrimeEvaluator ev(ps[i], path);
        auto& slot = slots[i];
        slot.reserve(report.checks.size());
        for (CheckId id : report.checks) slot.push_back(ev.result(id));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        abort.store(true, std::memory_order_relaxed);
      }
    }
  };

  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(ps.size(), 1)));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(drain);
  for (auto& th : pool) th.join();

  if (error) std::rethrow_exception(error);

  // slots are in ascending-prime order and each slot in check-id order,
  // so concatenation is already sorted by (p, check id).
  for (auto& slot : slots)
    for (auto& r : slot) report.results.push_back(std::move(r));

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

}  // namespace azkit
