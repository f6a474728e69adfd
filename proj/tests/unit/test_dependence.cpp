#include <doctest.h>

#include <map>
#include <optional>
#include <vector>

#include "lacunary/arith.hpp"
#include "lacunary/dependence.hpp"
#include "lacunary/error.hpp"

using namespace lacunary;

namespace {

// Smallest (u, v) with i1 u^j1 = i2 v^j2 and u, v <= limit.
std::optional<std::pair<long, long>> brute_witness(const IndexPair& a, const IndexPair& b,
                                                   long limit) {
  std::map<Integer, long> rhs;
  for (long v = limit; v >= 1; --v) rhs[ipow(Integer(v), b.j) * b.i] = v;
  for (long u = 1; u <= limit; ++u) {
    const auto it = rhs.find(ipow(Integer(u), a.j) * a.i);
    if (it != rhs.end()) return std::pair{u, it->second};
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(FamilyIndex({{1, 2}, {1, 2}}), Error);
  CHECK_THROWS_AS(FamilyIndex({{0, 2}}), Error);
  CHECK_THROWS_AS(FamilyIndex({{1, 1}}), Error);
  CHECK(FamilyIndex({{1, 2}, {2, 2}}).size() == 2);
}

TEST_CASE("condition (i) examples") {
  const auto w = condition_i_witness({1, 2}, {4, 2});
  REQUIRE(w);
  CHECK(w->u == 2);
  CHECK(w->v == 1);
  CHECK_FALSE(condition_i_witness({1, 2}, {2, 2}));
  CHECK_FALSE(condition_i_witness({1, 2}, {2, 4}));
  // Same i, different j: 1^j1 = 1^j2.
  const auto same_i = condition_i_witness({3, 2}, {3, 3});
  REQUIRE(same_i);
  CHECK(same_i->u == 1);
  CHECK(same_i->v == 1);
  // 2 u^3 = v^2: u = 2, v = 4.
  const auto mixed = condition_i_witness({2, 3}, {1, 2});
  REQUIRE(mixed);
  CHECK(mixed->u == 2);
  CHECK(mixed->v == 4);
  CHECK_THROWS_AS(condition_i_witness({1, 2}, {1, 2}), Error);
}

TEST_CASE("condition (i) matches brute force") {
  for (std::uint64_t i1 = 1; i1 <= 12; ++i1)
    for (std::uint64_t i2 = 1; i2 <= 12; ++i2)
      for (unsigned j1 = 2; j1 <= 4; ++j1)
        for (unsigned j2 = 2; j2 <= 4; ++j2) {
          const IndexPair a{i1, j1}, b{i2, j2};
          if (a == b) continue;
          const auto w = condition_i_witness(a, b);
          const auto brute = brute_witness(a, b, 200);
          CAPTURE(to_string(a));
          CAPTURE(to_string(b));
          if (brute) {
            REQUIRE(w);
            REQUIRE(w->u == brute->first);
            REQUIRE(w->v == brute->second);
          }
          if (w) REQUIRE(ipow(w->u, j1) * i1 == ipow(w->v, j2) * i2);
        }
}

TEST_CASE("family verdicts") {
  const FamilyVerdict ok = check_family(FamilyIndex({{1, 2}, {2, 4}, {3, 4}}));
  CHECK(ok.independent_for_all_sets());
  const FamilyVerdict squares = check_family(FamilyIndex({{1, 2}, {2, 2}}));
  CHECK(squares.condition_i.empty());
  CHECK(squares.square_pairs.size() == 2);
  CHECK_FALSE(squares.independent_for_all_sets());
  const FamilyVerdict bad = check_family(FamilyIndex({{1, 3}, {8, 3}}));
  REQUIRE(bad.condition_i.size() == 1);
  CHECK(bad.condition_i[0].u == 2);
  CHECK(bad.condition_i[0].v == 1);
}

TEST_CASE("counterexample certificates verify") {
  DependencyCertificate scaled = build_counterexample({1, 2}, {4, 2}, 2, 200);
  CHECK(scaled.kind == CertificateKind::ScaledSets);
  CHECK(scaled.verified);
  CHECK(verify_certificate(scaled));

  DependencyCertificate pell = build_counterexample({1, 2}, {2, 2}, 2, 200);
  CHECK(pell.kind == CertificateKind::Pell);
  CHECK(pell.w1 == 2);
  CHECK(pell.w2 == -1);
  CHECK(verify_certificate(pell));

  for (std::uint64_t b : {3, 10}) {
    DependencyCertificate c = build_counterexample({2, 2}, {3, 2}, b, 120);
    CHECK(c.kind == CertificateKind::Pell);
    CHECK(verify_certificate(c));
    DependencyCertificate s = build_counterexample({2, 3}, {1, 2}, b, 120);
    CHECK(s.kind == CertificateKind::ScaledSets);
    CHECK(verify_certificate(s));
  }

  // Tampering breaks it.
  DependencyCertificate bad = build_counterexample({1, 2}, {2, 2}, 2, 200);
  bad.w1 = 3;
  CHECK_FALSE(verify_certificate(bad));

  CHECK_THROWS_AS(build_counterexample({1, 2}, {2, 4}, 2, 100), Error);
  CHECK_THROWS_AS(build_counterexample({1, 3}, {2, 3}, 2, 100), Error);
}

TEST_CASE("equation solutions match a double loop") {
  const auto sols = enumerate_equation_solutions(1, 3, 1, 2, 1, 2000);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == EquationSolution{Integer(2), Integer(3), 1, -1});

  for (auto [i0, j0, i, j] : std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t, unsigned>>{
           {1, 2, 2, 2}, {2, 3, 1, 2}, {1, 2, 1, 3}, {3, 2, 1, 4}}) {
    const std::uint64_t x_max = 300, u_max = 5;
    std::vector<EquationSolution> brute;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
      const Integer lhs = ipow(make_integer(x), j0) * i0;
      for (std::uint64_t u = 1; u <= u_max; ++u) {
        for (int sign : {-1, 1}) {
          const Integer rhs = lhs - sign * make_integer(u);
          if (rhs <= 0 || rhs % i != 0) continue;
          const RootResult r = int_nth_root(Integer(rhs / i), j);
          if (r.exact && r.root >= 1) brute.push_back({make_integer(x), r.root, u, sign});
        }
      }
    }
    CHECK(enumerate_equation_solutions(i0, j0, i, j, u_max, x_max) == brute);
  }
  CHECK_THROWS_AS(enumerate_equation_solutions(1, 2, 1, 2, 1, 10), Error);
}
