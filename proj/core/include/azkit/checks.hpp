#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "azkit/padic.hpp"
#include "azkit/sequences.hpp"

namespace azkit {

/// Congruence checks require p >= 5.
struct PrimeTooSmall : std::domain_error {
  using std::domain_error::domain_error;
};

/// A congruence side turned out not to be p-integral. This signals a broken
/// precondition rather than a false congruence, so sweeps abort on it.
struct IllPosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The catalog of per-prime congruence checks. Throughout, s = (-1)^((p-1)/2),
/// h = (p-1)/2, q = q_p(2), c_k = C(2k,k), and E_{p-3} enters through its
/// residue mod p (multiplied by p^2 inside mod-p^3 checks, which makes the
/// result independent of the lift).
///
/// Mod p^3:
///   A1:   G_{p-1} == s*256^{p-1} + p^2*(E_{p-3} - 8*s*q^2
///                     + (1/2) sum_{k=0}^{h} c_k^2/16^k * H_k^2)
///   A2:   sum_{k=0}^{p-1} G_k/16^k == p^2*(1 - sum_{k=0}^{h} c_k^2/(16^k (k+1)) * H_k)
///   A4:   G_{p-1} == s*256^{p-1} + 3*p^2*E_{p-3}
///   A5:   sum_{k=0}^{p-1} G_k/16^k == p^2*(4*s - 3)
/// Mod p:
///   NEW1: (-1)^k C(h,k) C(h+k,k) == c_k^2/16^k, for every k in 0..h
///   B2:   sum_{k=0}^{h} c_k^2/16^k * H_k^2 == 2*s*(2*H_h^2 + sum_{k=1}^{h} (-1)^k/k^2)
///   B3:   H_h == -2*q
///   B4:   sum_{k=1}^{h} (-1)^k/k^2 == 2*s*E_{p-3}
///   B5:   sum_{k=0}^{h} c_k^2/16^k * H_k^2 == 16*s*q^2 + 4*E_{p-3}
///   C3:   sum_{k=0}^{h} c_k^2/(16^k (k+1)) * H_k == 4*(1 - s)
enum class CheckId { A1, A2, A4, A5, NEW1, B2, B3, B4, B5, C3 };

inline constexpr std::array<CheckId, 10> kAllChecks = {
    CheckId::A1, CheckId::A2, CheckId::A4, CheckId::A5, CheckId::NEW1,
    CheckId::B2, CheckId::B3, CheckId::B4, CheckId::B5, CheckId::C3};

/// Checks verified modulo p (exponent 1), as opposed to p^3.
inline constexpr std::array<CheckId, 6> kModPChecks = {
    CheckId::NEW1, CheckId::B2, CheckId::B3,
    CheckId::B4,   CheckId::B5, CheckId::C3};

inline constexpr std::array<CheckId, 4> kModP3Checks = {
    CheckId::A1, CheckId::A2, CheckId::A4, CheckId::A5};

/// 3 for A1/A2/A4/A5, 1 for the rest.
unsigned modulus_exponent(CheckId id);

std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view s);

/// Exact identities in n, checked over the rationals (no modulus):
///   IB1: sum_{k=0}^{n} (-1)^k C(n,k) C(n+k,k) H_k^2
///          == 2*(-1)^n (2*H_n^2 + sum_{k=1}^{n} (-1)^k/k^2),   n >= 0
///   IC1: sum_{k=0}^{n} (-1)^k/(k+1) C(n,k) C(n+k,k) H_k
///          == ((-1)^n - 1)/(n(n+1)),                           n >= 1
/// IC1 at n = 0 is formally indeterminate (0/0 right side) and is rejected.
enum class IdentityId { IB1, IC1 };

std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view s);

/// How a check evaluates its two sides.
///   Fast:  native residue arithmetic mod p^m throughout (the default).
///   Exact: exact big-rational sums, reduced once at the end (the
///          reference path).
///   Both:  run the two paths and require identical residues; a mismatch
///          fails the check with a diagnostic.
enum class EvalPath { Fast, Exact, Both };

/// Outcome of one check at one prime. For scalar checks, passed means
/// lhs == rhs. NEW1 is a family of congruences, one per k in 0..(p-1)/2:
/// passed is their conjunction, lhs/rhs hold the sums of the per-k residues,
/// and detail names the first failing k, if any.
struct CheckResult {
  CheckId check;
  std::uint64_t p;
  unsigned m;
  Residue lhs;
  Residue rhs;
  bool passed;
  std::string detail;
};

/// Composition of the two derivation chains: both right-hand sides of the
/// refined mod-p^3 statements must agree with the right-hand sides they were
/// derived from, i.e. rhs(A1) == rhs(A4) and rhs(A2) == rhs(A5) mod p^3.
struct ConsistencyResult {
  std::uint64_t p;
  bool a1_matches_a4;
  bool a2_matches_a5;
  bool passed() const { return a1_matches_a4 && a2_matches_a5; }
};

/// Aggregate of check results over a prime range. results are sorted by
/// (p, check id) regardless of how the sweep was scheduled.
struct SweepReport {
  std::uint64_t pmin = 0;
  std::uint64_t pmax = 0;
  std::vector<CheckId> checks;
  std::vector<CheckResult> results;
  std::chrono::milliseconds elapsed{0};

  std::vector<CheckResult> failures() const;
  std::size_t passed_count() const;
};

/// Evaluates one check at one prime. Throws NotPrime, PrimeTooSmall (p < 5)
/// or IllPosed (a congruence side was not p-integral).
CheckResult run_check(CheckId id, std::uint64_t p,
                      EvalPath path = EvalPath::Fast);

/// True iff both sides of the identity are equal as exact rationals.
/// Throws std::domain_error for IC1 at n = 0.
bool run_identity(IdentityId id, unsigned long n);

ConsistencyResult run_consistency_detail(std::uint64_t p,
                                         EvalPath path = EvalPath::Fast);
bool run_consistency(std::uint64_t p, EvalPath path = EvalPath::Fast);

/// run_consistency_detail at every prime in [pmin, pmax], ascending.
/// Deterministic for every worker count.
std::vector<ConsistencyResult> consistency_sweep(
    std::uint64_t pmin, std::uint64_t pmax, unsigned workers = 1,
    EvalPath path = EvalPath::Fast);

/// Runs every requested check at every prime in [pmin, pmax]. Ordinary
/// check failures are collected and the sweep continues; IllPosed aborts.
/// The report is identical for every worker count.
SweepReport sweep(std::uint64_t pmin, std::uint64_t pmax,
                  const std::vector<CheckId>& ids, unsigned workers = 1,
                  EvalPath path = EvalPath::Fast);

}  // namespace azkit
