#include <doctest.h>

#include <set>
#include <vector>

#include "lacunary/arith.hpp"
#include "lacunary/error.hpp"
#include "lacunary/forge.hpp"

using namespace lacunary;

namespace {

std::vector<IndexPair> small_family() {
  std::vector<IndexPair> out;
  for (std::uint64_t i = 1; i <= 4; ++i)
    for (unsigned j = 2; j <= 4; ++j) out.push_back({i, j});
  return out;
}

// Exact check of i0 q^j0 +- u against every i k^j by root extraction.
bool brute_clear(const Integer& q, std::uint64_t i0, unsigned j0, std::uint64_t N,
                 const std::vector<IndexPair>& family) {
  const Integer c = ipow(q, j0) * i0;
  for (std::uint64_t u = 1; u < N; ++u) {
    for (int sign : {-1, 1}) {
      const Integer n = c + sign * make_integer(u);
      for (const auto& [i, j] : family) {
        if (n % i != 0) continue;
        if (int_nth_root(Integer(n / i), j).exact) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("hensel step lifts to the prescribed residue") {
  // x^2 + 1 over p = 5: roots 2 and 3.
  for (long x : {2, 3}) {
    const Integer X = hensel_step(2, 1, 1, Integer(5), Integer(x));
    const Integer val = X * X + 1;
    CHECK((val - 5) % 25 == 0);
    CHECK(X % 5 == x);
  }
  CHECK_THROWS_AS(hensel_step(2, 1, 1, Integer(5), Integer(1)), Error);
  // x^2 - 4 over p = 2: g'(x) = 2x vanishes mod 2.
  try {
    hensel_step(2, 1, -4, Integer(2), Integer(0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularDerivative);
  }
}

TEST_CASE("lemma1_find returns verified witnesses with distinct primes") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::uint64_t u = 1; u <= 3; ++u) {
      for (std::int64_t v : {-2, -1, 1, 2}) {
        const auto ws = lemma1_find(k, u, v, 4, Integer(2));
        REQUIRE(ws.size() == 4);
        std::set<Integer> primes;
        for (const auto& w : ws) {
          REQUIRE(w.verify());
          const Integer val = w.value();
          REQUIRE(val % w.p == 0);
          REQUIRE(val % (w.p * w.p) != 0);
          REQUIRE(w.p > Integer(k));
          REQUIRE(w.p > make_integer(u));
          REQUIRE(is_prime(w.p));
          primes.insert(w.p);
        }
        REQUIRE(primes.size() == ws.size());
      }
    }
  }
}

TEST_CASE("lemma1_find respects p_min, used primes and budget") {
  std::set<Integer> used;
  const auto first = lemma1_find(2, 1, 1, 3, Integer(100), &used);
  for (const auto& w : first) CHECK(w.p > 100);
  CHECK(used.size() == 3);
  const auto second = lemma1_find(2, 1, 1, 3, Integer(100), &used);
  for (const auto& w : second) CHECK(first.end() == std::find_if(first.begin(), first.end(),
                                                      [&](const auto& f) { return f.p == w.p; }));
  SearchBudget tiny;
  tiny.scan = 3;
  CHECK_THROWS_AS(lemma1_find(2, 1, 1, 50, Integer(2), nullptr, tiny), Error);
  CHECK_THROWS_AS(lemma1_find(2, 0, 1, 1, Integer(2)), Error);
  CHECK_THROWS_AS(lemma1_find(2, 1, 0, 1, Integer(2)), Error);
}

TEST_CASE("degenerate system N = 1") {
  const CongruenceSystem sys = build_system(1, 2, 1, Integer(1), Integer(1), Integer(2));
  CHECK(sys.witnesses.empty());
  CHECK(sys.alpha == 1);
  CHECK(sys.x == 1);
  CHECK(sys.verify());
}

TEST_CASE("system invariants and q in the progression") {
  for (std::uint64_t N : {2, 3, 4}) {
    for (auto [d, h] : std::vector<std::pair<long, long>>{{1, 1}, {4, 3}, {6, 5}}) {
      const CongruenceSystem sys = build_system(1, 2, N, Integer(d), Integer(h), Integer(2));
      REQUIRE(sys.verify());
      REQUIRE(sys.witnesses.size() == 2 * N - 2);
      Integer alpha = d;
      for (const auto& w : sys.witnesses) {
        REQUIRE(w.p > make_integer(N));
        REQUIRE(gcd(w.p, Integer(d)) == 1);
        alpha *= w.p * w.p;
      }
      REQUIRE(alpha == sys.alpha);
      for (const auto& c : sys.congruences()) REQUIRE((sys.x - c.residue) % c.modulus == 0);
      REQUIRE(gcd(sys.x, sys.alpha) == 1);
      REQUIRE(sys.x > 0);

      const QCandidate q = find_q(sys, 100000);
      REQUIRE(is_prime(q.q));
      REQUIRE(q.q > sys.alpha);
      REQUIRE(q.q == sys.alpha * q.n0 + sys.x);
      REQUIRE((q.q - h) % d == 0);

      // Each i0 q^j0 + l - N is divisible by exactly one power of p_l.
      std::size_t idx = 0;
      for (std::uint64_t l = 1; l <= 2 * N - 1; ++l) {
        if (l == N) continue;
        const auto& w = sys.witnesses[idx++];
        const Integer val = q.q * q.q + (Integer(make_integer(l)) - make_integer(N));
        REQUIRE(val % w.p == 0);
        REQUIRE(val % (w.p * w.p) != 0);
      }
    }
  }
}

TEST_CASE("forge pipeline and certificate") {
  ForgeRequest req;
  req.i0 = 1;
  req.j0 = 2;
  req.N = 2;
  req.family = {{1, 2}, {2, 2}, {1, 3}};
  const ForgeCertificate cert = forge(req);
  CHECK(cert.q.q == 227);
  CHECK(cert.center == 227 * 227);
  CHECK(cert.violations.empty());
  CHECK(cert.window_clear);
  CHECK(verify_certificate(cert));

  ForgeCertificate forged = cert;
  forged.q.q = 229;
  CHECK_FALSE(verify_certificate(forged));
}

TEST_CASE("forge output clears the window for the small family") {
  for (std::uint64_t N : {2, 3}) {
    ForgeRequest req;
    req.N = N;
    req.family = small_family();
    const ForgeCertificate cert = forge(req);
    REQUIRE(verify_certificate(cert));
    REQUIRE(brute_clear(cert.q.q, 1, 2, N, req.family));
    for (const auto& r : cert.rejected_q) REQUIRE_FALSE(verify_exclusions(r, 1, 2, N, req.family).empty());
  }
}

TEST_CASE("verify_exclusions reports hits") {
  // 3^2 + 1 would need to be i k^j; 3^2 - 1 = 8 = 1 * 2^3.
  const auto v = verify_exclusions(Integer(3), 1, 2, 2, {{1, 3}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].u == 1);
  CHECK(v[0].sign == -1);
  CHECK(v[0].k == 2);
}

TEST_CASE("find_q rejects non-coprime systems and exhausts budgets") {
  CongruenceSystem sys = build_system(1, 2, 2, Integer(1), Integer(1), Integer(2));
  CHECK_THROWS_AS(find_q(sys, 0), Error);
  sys.x *= sys.witnesses.front().p;
  CHECK_THROWS_AS(find_q(sys, 10), Error);
}
