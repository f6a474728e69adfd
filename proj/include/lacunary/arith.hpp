#pragma once

// Exact integer utilities: primality, factorization, integer roots and CRT.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lacunary/types.hpp"

namespace lacunary {

class ExponentSet;

struct Primality {
  bool prime = false;
  // Set when n >= 2^64 and the verdict rests on random-base Miller-Rabin
  // (error probability below 2^-128).
  bool probable = false;
};

/// Miller-Rabin with the first twelve prime bases, which is deterministic
/// for every n < 3.3e24 and therefore for all 64-bit inputs. Larger inputs
/// get 52 further rounds with bases drawn from a generator seeded by n, so
/// the verdict is reproducible.
Primality primality(const Integer& n);

inline bool is_prime(const Integer& n) { return primality(n).prime; }

/// Sorted list of all primes <= limit (simple Eratosthenes sieve).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Integer value;
  std::vector<PrimePower> factors;  // strictly increasing primes

  Integer product() const;
  bool squarefree() const;
  /// Exponent of p in value, zero when p does not divide it.
  unsigned order(const Integer& p) const;
};

constexpr std::uint64_t kDefaultFactorBudget = 50'000'000;

/// Complete factorization: trial division by primes below 10^6, then Brent's
/// variant of Pollard rho on whatever composite cofactor remains. `budget`
/// caps the total number of rho iterations; running out raises
/// ErrorCode::BudgetExceeded.
Factorization factor(const Integer& n,
                     std::uint64_t budget = kDefaultFactorBudget);

struct RootResult {
  Integer root;
  bool exact = false;
};

/// floor(n^(1/k)) together with whether it is exact.
RootResult int_nth_root(const Integer& n, unsigned long k);

/// The k with n = i * k^j and k in `s`, if there is one. Defined in sets.cpp.
std::optional<Integer> is_exponent_image(const Integer& n, std::uint64_t i,
                                         unsigned j, const ExponentSet& s);

struct Congruence {
  Integer residue;
  Integer modulus;
};

struct CrtSolution {
  Integer x;      // least nonnegative solution
  Integer alpha;  // lcm of the moduli
};

/// Combines congruences whose moduli need not be coprime. Raises
/// ErrorCode::Inconsistent when two of them disagree on a shared factor.
CrtSolution crt_solve(std::span<const Congruence> congruences);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace lacunary
