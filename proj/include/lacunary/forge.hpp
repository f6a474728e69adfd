#pragma once

// Effective version of the prime/congruence construction: primes p with
// u x^k + v = p (mod p^2) solvable, a CRT system combining them, and a prime
// q in the resulting progression whose neighbourhood i0 q^j0 +- u avoids
// every value i k^j of a finite family.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "lacunary/arith.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

struct LemmaOneWitness {
  unsigned k = 2;
  std::uint64_t u = 1;
  std::int64_t v = 1;
  Integer p;
  Integer x;

  /// u x^k + v (exact).
  Integer value() const;
  /// u x^k + v = p (mod p^2), hence p divides it exactly once.
  bool verify() const;
};

struct SearchBudget {
  std::uint64_t scan = 200'000;  // values m tried by lemma1_find per witness set
  std::uint64_t factor = kDefaultFactorBudget;  // rho iterations per factor()
};

/// Lifts a root x of u X^k + v = 0 (mod p) to X = p y + x with
/// u X^k + v = p (mod p^2), where y solves g'(x) y - 1 + g(x)/p = 0 (mod p).
/// Raises ErrorCode::SingularDerivative when g'(x) = 0 (mod p) and
/// InvalidArgument when x is not a root mod p.
Integer hensel_step(unsigned k, std::uint64_t u, std::int64_t v,
                    const Integer& p, const Integer& x);

/// `count` witnesses with distinct primes p > max(p_min, k, u, |v|), found by
/// scanning m = 1, 2, ... and lifting every new prime divisor of u m^k + v.
/// Primes already in `used` are skipped, and accepted ones are added to it.
std::vector<LemmaOneWitness> lemma1_find(unsigned k, std::uint64_t u,
                                         std::int64_t v, std::size_t count,
                                         const Integer& p_min,
                                         std::set<Integer>* used = nullptr,
                                         const SearchBudget& budget = {});

struct CongruenceSystem {
  std::uint64_t i0 = 1;
  unsigned j0 = 2;
  std::uint64_t N = 1;
  Integer d = 1;
  Integer h = 1;
  // One witness per l in {1..2N-1} \ {N}, in increasing l, with v = l - N.
  std::vector<LemmaOneWitness> witnesses;
  Integer alpha;  // d * prod p_l^2
  Integer x;      // least positive solution

  std::vector<Congruence> congruences() const;
  /// Checks every stored invariant: witnesses, distinct primes coprime to d,
  /// alpha, the congruences, and gcd(alpha, x) = 1.
  bool verify() const;
};

CongruenceSystem build_system(std::uint64_t i0, unsigned j0, std::uint64_t N,
                              const Integer& d, const Integer& h,
                              const Integer& p_min,
                              const SearchBudget& budget = {});

struct QCandidate {
  Integer q;
  Integer n0;  // q = alpha n0 + x
  bool probable = false;
};

/// Least n0 >= start with q = alpha n0 + x prime (and q > alpha unless
/// `require_above_alpha` is false). Raises ErrorCode::BudgetExceeded after
/// `attempts` candidates and InvalidArgument if gcd(alpha, x) != 1.
QCandidate find_q(const CongruenceSystem& sys, std::uint64_t attempts,
                  bool require_above_alpha = true, const Integer& start = 0);

struct ExclusionViolation {
  std::uint64_t u = 0;
  int sign = 1;  // i0 q^j0 + sign * u
  IndexPair pair;
  Integer k;  // i0 q^j0 + sign * u == i k^j
};

std::vector<ExclusionViolation> verify_exclusions(
    const Integer& q, std::uint64_t i0, unsigned j0, std::uint64_t N,
    const std::vector<IndexPair>& family);

struct ForgeRequest {
  std::uint64_t i0 = 1;
  unsigned j0 = 2;
  std::uint64_t N = 2;
  Integer d = 1;
  Integer h = 1;
  Integer p_min = 2;
  std::vector<IndexPair> family;
  std::uint64_t q_attempts = 100'000;
  bool require_above_alpha = true;
  SearchBudget budget;
};

struct ForgeCertificate {
  ForgeRequest request;
  CongruenceSystem system;
  QCandidate q;
  Integer center;  // i0 q^j0
  std::vector<ExclusionViolation> violations;  // empty on success
  // Candidates q that were prime but failed the exclusion check.
  std::vector<Integer> rejected_q;
  bool window_clear = false;  // exclusion_window_check on the family form
};

/// Full pipeline: build the system, then walk primes q in its progression
/// until one clears the exclusion window for the whole family.
ForgeCertificate forge(const ForgeRequest& request);

/// Re-checks a certificate from its stored numbers alone.
bool verify_certificate(const ForgeCertificate& cert);

}  // namespace lacunary
