#include <doctest.h>

#include <random>
#include <vector>

#include "lacunary/arith.hpp"
#include "lacunary/error.hpp"

using namespace lacunary;

namespace {

// Plain trial division; the oracle for everything below.
bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer from_string(const char* s) { return Integer(s); }

}  // namespace

TEST_CASE("primality on small and classic inputs") {
  for (std::uint64_t n = 0; n < 5000; ++n)
    CHECK_MESSAGE(is_prime(make_integer(n)) == naive_prime(n), "n=" << n);

  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(make_integer(std::uint64_t{3215031751})));
  CHECK_FALSE(is_prime(make_integer(std::uint64_t{3825123056546413051ULL})));
  CHECK_FALSE(is_prime(make_integer(std::uint64_t{561})));

  CHECK(is_prime(make_integer(std::uint64_t{18446744073709551557ULL})));
  CHECK_FALSE(primality(make_integer(std::uint64_t{18446744073709551557ULL})).probable);

  // 2^127 - 1 is prime; 2^128 + 1 is not.
  const Primality m127 = primality(from_string("170141183460469231731687303715884105727"));
  CHECK(m127.prime);
  CHECK(m127.probable);
  CHECK_FALSE(is_prime(from_string("340282366920938463463374607431768211457")));
  CHECK_FALSE(is_prime(Integer(-7)));
}

TEST_CASE("sieve agrees with trial division up to 10^6") {
  const auto primes = primes_up_to(1'000'000);
  CHECK(primes.size() == 78498);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const bool listed = idx < primes.size() && primes[idx] == n;
    if (listed) ++idx;
    if (n < 20000) REQUIRE(listed == naive_prime(n));
    if (n % 997 == 0) REQUIRE(listed == is_prime(make_integer(n)));
  }
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("factor examples") {
  const Factorization f = factor(Integer(360));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{2, 3});
  CHECK(f.factors[1] == PrimePower{3, 2});
  CHECK(f.factors[2] == PrimePower{5, 1});
  CHECK_FALSE(f.squarefree());
  CHECK(f.order(Integer(3)) == 2);
  CHECK(f.order(Integer(7)) == 0);

  CHECK(factor(Integer(1)).factors.empty());
  CHECK(factor(Integer(30)).squarefree());
  CHECK_THROWS_AS(factor(Integer(0)), Error);

  // Product of two primes above the trial-division range.
  const Integer p("1000000007"), q("998244353");
  const Factorization pq = factor(p * q);
  REQUIRE(pq.factors.size() == 2);
  CHECK(pq.factors[0].prime == q);
  CHECK(pq.factors[1].prime == p);

  // Perfect power of a large prime.
  const Integer big = p * p * p;
  const Factorization cube = factor(big);
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0] == PrimePower{p, 3});
}

TEST_CASE("factor round-trips on random n <= 10^12") {
  std::mt19937_64 rng(20241019);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ULL);
  for (int t = 0; t < 10000; ++t) {
    const Integer n = make_integer(dist(rng));
    const Factorization f = factor(n);
    REQUIRE(f.product() == n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      REQUIRE(is_prime(f.factors[k].prime));
      REQUIRE(f.factors[k].exponent >= 1);
      if (k > 0) REQUIRE(f.factors[k - 1].prime < f.factors[k].prime);
    }
  }
}

TEST_CASE("factor budget is enforced") {
  const Integer p("1000000000000000003"), q("1000000000000000009");
  CHECK_THROWS_AS(factor(p * q, 10), Error);
  try {
    factor(p * q, 10);
  } catch (const Error& e) {
    CHECK(e.is_budget());
  }
}

TEST_CASE("integer roots") {
  CHECK(int_nth_root(Integer(26), 3).root == 2);
  CHECK_FALSE(int_nth_root(Integer(26), 3).exact);
  CHECK(int_nth_root(Integer(27), 3).exact);
  CHECK(int_nth_root(Integer(0), 5).root == 0);
  CHECK(int_nth_root(Integer(1), 7).exact);
  CHECK_THROWS_AS(int_nth_root(Integer(-8), 3), Error);
  CHECK_THROWS_AS(int_nth_root(Integer(8), 0), Error);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const Integer n = make_integer(rng()) * make_integer(rng()) + 1;
    const unsigned long k = 2 + rng() % 9;
    const RootResult r = int_nth_root(n, k);
    Integer lo, hi;
    mpz_pow_ui(lo.get_mpz_t(), r.root.get_mpz_t(), k);
    const Integer next = r.root + 1;
    mpz_pow_ui(hi.get_mpz_t(), next.get_mpz_t(), k);
    REQUIRE(lo <= n);
    REQUIRE(n < hi);
    REQUIRE(r.exact == (lo == n));
  }
}

TEST_CASE("crt with coprime and shared moduli") {
  std::vector<Congruence> sys = {{2, 3}, {3, 5}, {2, 7}};
  CrtSolution s = crt_solve(sys);
  CHECK(s.x == 23);
  CHECK(s.alpha == 105);

  std::vector<Congruence> shared = {{1, 4}, {3, 6}};
  s = crt_solve(shared);
  CHECK(s.alpha == 12);
  CHECK(s.x == 9);

  std::vector<Congruence> bad = {{0, 4}, {1, 6}};
  CHECK_THROWS_AS(crt_solve(bad), Error);

  std::vector<Congruence> zero_mod = {{0, 0}};
  CHECK_THROWS_AS(crt_solve(zero_mod), Error);

  CHECK(crt_solve(std::span<const Congruence>{}).alpha == 1);
}

TEST_CASE("crt solution satisfies every congruence") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t count = 1 + rng() % 5;
    const Integer truth = make_integer(rng() % 1'000'000'000);
    std::vector<Congruence> sys;
    for (std::size_t k = 0; k < count; ++k) {
      const Integer m = make_integer(1 + rng() % 500);
      Integer r = truth % m;
      sys.push_back({r, m});
    }
    const CrtSolution s = crt_solve(sys);
    Integer l = 1;
    for (const auto& c : sys) {
      REQUIRE((s.x - c.residue) % c.modulus == 0);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.modulus.get_mpz_t());
    }
    REQUIRE(s.alpha == l);
    REQUIRE(s.x >= 0);
    REQUIRE(s.x < s.alpha);
    REQUIRE((truth - s.x) % s.alpha == 0);
    sys.push_back({s.x, s.alpha});
    const CrtSolution again = crt_solve(sys);
    REQUIRE(again.x == s.x);
    REQUIRE(again.alpha == s.alpha);
  }
}
