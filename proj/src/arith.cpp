#include "lacunary/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "lacunary/error.hpp"

namespace lacunary {

std::string to_string(const IndexPair& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

namespace {

constexpr std::array<unsigned, 12> kFixedBases = {2,  3,  5,  7,  11, 13,
                                                  17, 19, 23, 29, 31, 37};
constexpr int kExtraRounds = 52;
constexpr std::uint64_t kTrialLimit = 1'000'000;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool mr_round_u64(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned p : kFixedBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kFixedBases) {
    if (!mr_round_u64(n, a, d, s)) return false;
  }
  return true;
}

bool mr_round(const Integer& n, const Integer& a, const Integer& d,
              unsigned s) {
  const Integer nm1 = n - 1;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

u64 rho_u64(u64 n, u64 c, u64& steps, u64 budget) {
  // Brent's cycle detection with batched gcds.
  auto f = [&](u64 x) { return static_cast<u64>((static_cast<u128>(x) * x + c) % n); };
  u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  constexpr u64 m = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += lim;
      steps += lim;
      if (steps > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "factor: rho budget exhausted on " + std::to_string(n));
      }
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

Integer rho(const Integer& n, unsigned long c, u64& steps, u64 budget) {
  if (fits_u64(n)) return make_integer(rho_u64(to_u64(n), c, steps, budget));
  auto f = [&](const Integer& x) { return Integer((x * x + c) % n); };
  Integer y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  constexpr u64 m = 128;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        Integer diff = x - y;
        q = q * abs(diff) % n;
      }
      g = gcd(q, n);
      k += lim;
      steps += lim;
      if (steps > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "factor: rho budget exhausted on " + n.get_str());
      }
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g;
}

void split(const Integer& n, std::vector<Integer>& out, u64& steps,
           u64 budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  // Odd composite with no factor below 10^6; perfect powers are common in
  // this code base (i*k^j), so peel them off before rho.
  for (unsigned long k = 2; k <= 8; ++k) {
    RootResult rr = int_nth_root(n, k);
    if (rr.exact) {
      std::vector<Integer> sub;
      split(rr.root, sub, steps, budget);
      for (unsigned long t = 0; t < k; ++t)
        out.insert(out.end(), sub.begin(), sub.end());
      return;
    }
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = rho(n, c, steps, budget);
    if (d != n && d != 1) {
      split(d, out, steps, budget);
      split(n / d, out, steps, budget);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!composite[p]) primes.push_back(p);
  }
  return primes;
}

Primality primality(const Integer& n) {
  if (sgn(n) <= 0) return {};
  if (fits_u64(n)) return {is_prime_u64(to_u64(n)), false};

  for (unsigned p : kFixedBases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {};
  }
  Integer d = n - 1;
  unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned a : kFixedBases) {
    if (!mr_round(n, Integer(a), d, s)) return {};
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  const Integer span = n - 3;
  for (int round = 0; round < kExtraRounds; ++round) {
    Integer a = rng.get_z_range(span) + 2;
    if (!mr_round(n, a, d, s)) return {};
  }
  return {true, true};
}

Integer Factorization::product() const {
  Integer p = 1;
  for (const auto& f : factors) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    p *= t;
  }
  return p;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

unsigned Factorization::order(const Integer& p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

Factorization factor(const Integer& n, std::uint64_t budget) {
  if (sgn(n) <= 0)
    throw Error(ErrorCode::InvalidArgument, "factor: n must be >= 1");
  Factorization out;
  out.value = n;
  Integer rest = n;
  std::vector<Integer> primes;

  const auto& small = small_primes();
  for (std::size_t idx = 0; idx < small.size() && rest > 1; ++idx) {
    const u64 p = small[idx];
    if (rest < Integer(p) * p) break;
    if ((idx & 1023) == 1023 && is_prime(rest)) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.factors.push_back({make_integer(p), e});
    }
  }
  u64 steps = 0;
  split(rest, primes, steps, budget);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) {
              return a.prime < b.prime;
            });
  return out;
}

RootResult int_nth_root(const Integer& n, unsigned long k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "int_nth_root: k >= 1");
  if (sgn(n) < 0)
    throw Error(ErrorCode::InvalidArgument, "int_nth_root: n must be >= 0");
  RootResult r;
  r.exact = mpz_root(r.root.get_mpz_t(), n.get_mpz_t(), k) != 0;
  return r;
}

CrtSolution crt_solve(std::span<const Congruence> congruences) {
  Integer x = 0;
  Integer alpha = 1;
  for (const auto& c : congruences) {
    if (sgn(c.modulus) <= 0)
      throw Error(ErrorCode::InvalidArgument, "crt_solve: modulus must be >= 1");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.residue.get_mpz_t(), c.modulus.get_mpz_t());
    const Integer g = gcd(alpha, c.modulus);
    Integer diff = r - x;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) {
      throw Error(ErrorCode::Inconsistent,
                  "crt_solve: " + c.residue.get_str() + " mod " +
                      c.modulus.get_str() + " conflicts with earlier congruences");
    }
    const Integer m = c.modulus / g;
    Integer inv;
    const Integer a = alpha / g;
    // a and m are coprime here; with m == 1 any t works.
    if (m == 1) {
      inv = 0;
    } else {
      mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    }
    Integer t = (diff / g) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    x += alpha * t;
    alpha *= m;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), alpha.get_mpz_t());
  }
  return {x, alpha};
}

}  // namespace lacunary
