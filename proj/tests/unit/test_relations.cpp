#include <doctest.h>

#include <random>
#include <vector>

#include "lacunary/error.hpp"
#include "lacunary/relations.hpp"

using namespace lacunary;

namespace {

Integer random_digits(std::mt19937_64& rng, std::uint64_t b, std::size_t count) {
  Integer out = 0;
  for (std::size_t k = 0; k < count; ++k) out = out * b + make_integer(rng() % b);
  return out;
}

// True iff a and b are nonzero multiples of each other.
bool proportional(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a[x] * b[y] != a[y] * b[x]) return false;
  return true;
}

SeriesSpec series(std::uint64_t i, unsigned j, ExponentSet set = ExponentSet::naturals()) {
  SeriesSpec s;
  s.i = i;
  s.j = j;
  s.set = std::move(set);
  return s;
}

}  // namespace

TEST_CASE("lll reduces a textbook basis") {
  std::vector<std::vector<Integer>> basis = {
      {Integer(1), Integer(1), Integer(1)},
      {Integer(-1), Integer(0), Integer(2)},
      {Integer(3), Integer(5), Integer(6)},
  };
  const auto norms = lll_reduce(basis);
  REQUIRE(norms.size() == 3);
  // Determinant is preserved: product of GS norms^2 = det^2 = 9.
  Rational prod = 1;
  for (const auto& n : norms) prod *= n;
  CHECK(prod == 9);
  CHECK(basis[0] == std::vector<Integer>{Integer(0), Integer(1), Integer(0)});
  // Lovasz condition holds on the output.
  for (std::size_t k = 1; k < norms.size(); ++k) CHECK(norms[k] * 4 >= norms[k - 1]);
}

TEST_CASE("relation between 1 and 3") {
  const std::vector<FixedPointValue> vals = {FixedPointValue::exact(10, Integer(1), 60),
                                             FixedPointValue::exact(10, Integer(3), 60)};
  const RelationSearch r = find_relation({vals, Integer(1000), 50});
  REQUIRE(r.relation);
  CHECK(proportional(r.relation->coefficients, {Integer(-3), Integer(1)}));
  CHECK(r.relation->coefficients[0] > 0);
}

TEST_CASE("input checks") {
  const std::vector<FixedPointValue> vals = {FixedPointValue::exact(2, Integer(1), 80),
                                             FixedPointValue::exact(2, Integer(3), 80)};
  CHECK_THROWS_AS(find_relation({vals, Integer(1000), 20}), Error);
  CHECK_THROWS_AS(find_relation({{vals[0]}, Integer(1000), 60}), Error);
  CHECK_THROWS_AS(verify_relation(vals, {Integer(0), Integer(0)}), Error);
  CHECK_THROWS_AS(verify_relation(vals, {Integer(1)}), Error);

  FixedPointValue noisy = eval_series(series(1, 2), 2, 40);
  try {
    find_relation({{FixedPointValue::exact(2, Integer(1), 56), noisy}, Integer(100), 200});
    FAIL("expected PrecisionTooLow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionTooLow);
  }
}

TEST_CASE("planted relations are recovered") {
  std::mt19937_64 rng(42);
  const std::size_t digits = 100, scale = digits + 16;
  int recovered = 0;
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t b = (t % 2) ? 10 : 2;
    const std::size_t width = 2 + t % 3;  // random reals besides the constant 1
    std::vector<FixedPointValue> vals = {FixedPointValue::exact(b, Integer(1), scale)};
    std::vector<Integer> planted = {make_integer(std::int64_t(rng() % 201) - 100)};
    Integer last = planted[0] * ipow(make_integer(b), scale);
    for (std::size_t k = 0; k < width; ++k) {
      const Integer m = random_digits(rng, b, scale);
      vals.push_back({b, m, scale, Rational(0)});
      Integer c = make_integer(std::int64_t(rng() % 201) - 100);
      if (c == 0) c = 1;
      planted.push_back(c);
      last += c * m;
    }
    vals.push_back({b, last, scale, Rational(0)});
    planted.push_back(-1);

    const RelationSearch r = find_relation({vals, Integer(1000), digits});
    REQUIRE(r.relation);
    REQUIRE(verify_relation(vals, r.relation->coefficients).pass);
    if (proportional(r.relation->coefficients, planted)) ++recovered;
  }
  CHECK(recovered == 100);
}

TEST_CASE("relation search is invariant under scaling by a power of b") {
  std::mt19937_64 rng(3);
  const std::size_t scale = 130;
  const Integer x = random_digits(rng, 2, scale);
  const Integer y = random_digits(rng, 2, scale);
  const Integer one = ipow(Integer(2), scale);
  const std::vector<Integer> mants = {one, x, y, 3 * x - 5 * y + 7 * one};
  std::vector<FixedPointValue> base, shifted;
  for (const auto& m : mants) {
    base.push_back({2, m, scale, Rational(0)});
    shifted.push_back({2, m, scale - 9, Rational(0)});  // times 2^9
  }
  const RelationSearch a = find_relation({base, Integer(100), 100});
  const RelationSearch b = find_relation({shifted, Integer(100), 100});
  REQUIRE(a.relation);
  REQUIRE(b.relation);
  CHECK(a.relation->coefficients == b.relation->coefficients);
  CHECK(proportional(a.relation->coefficients, {Integer(7), Integer(3), Integer(-5), Integer(-1)}));
}

TEST_CASE("pell values carry the certificate relation") {
  const std::vector<FixedPointValue> vals = {
      FixedPointValue::exact(2, Integer(1), 150 + 16),
      eval_series(series(1, 2, ExponentSet::pell_x(2)), 2, 150),
      eval_series(series(2, 2, ExponentSet::pell_y(2, 1)), 2, 150),
  };
  const RelationSearch r = find_relation({vals, Integer(1000), 150});
  REQUIRE(r.relation);
  CHECK(r.relation->coefficients == std::vector<Integer>{Integer(0), Integer(2), Integer(-1)});
  CHECK(verify_relation(vals, r.relation->coefficients).pass);
}

TEST_CASE("no small relation among independent lacunary values") {
  const std::size_t p = 120;
  const std::vector<FixedPointValue> vals = {
      FixedPointValue::exact(2, Integer(1), p + 16),
      eval_series(series(1, 2), 2, p),
      eval_series(series(2, 2), 2, p),
      eval_series(series(1, 3), 2, p),
  };
  const RelationSearch r = find_relation({vals, Integer(100), p});
  CHECK_FALSE(r.relation);
  CHECK(r.coeff_bound == 100);
  CHECK(r.precision == p);
  CHECK(r.residual_floor > 0);
  CHECK(r.bound_certified());
}
