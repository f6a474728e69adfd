#include "lacunary/relations.hpp"

#include <algorithm>

#include "lacunary/error.hpp"

namespace lacunary {

namespace {

Integer round_div(const Integer& num, const Integer& den) {
  // nearest integer to num/den for den > 0, halves rounded up
  Integer r;
  Integer twice = 2 * num + den;
  Integer den2 = 2 * den;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  return r;
}

Integer round_rational(const Rational& q) {
  return round_div(q.get_num(), q.get_den());
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

Rational pow_b(std::uint64_t b, long e) {
  if (e >= 0) return Rational(ipow(b, static_cast<unsigned long>(e)));
  Rational q(Integer(1), ipow(b, static_cast<unsigned long>(-e)));
  q.canonicalize();
  return q;
}

/// floor(log_b |q|) for q != 0.
long magnitude(const Rational& q, std::uint64_t b) {
  const Rational a = abs(q);
  long e = 0;
  if (a >= 1) {
    while (pow_b(b, e + 1) <= a) ++e;
  } else {
    while (pow_b(b, e) > a) --e;
  }
  return e;
}

}  // namespace

std::vector<Rational> lll_reduce(std::vector<std::vector<Integer>>& basis,
                                 const Rational& delta) {
  const std::size_t n = basis.size();
  if (n == 0) return {};
  const Integer dp = delta.get_num(), dq = delta.get_den();

  // 1-based indices follow the usual statement of integral LLL; d[0] = 1.
  std::vector<std::vector<Integer>> b(n + 1);
  for (std::size_t t = 0; t < n; ++t) b[t + 1] = basis[t];
  std::vector<Integer> d(n + 1, Integer(0));
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  d[0] = 1;
  d[1] = dot(b[1], b[1]);
  if (d[1] == 0)
    throw Error(ErrorCode::InvalidArgument, "lll_reduce: zero basis vector");

  auto red = [&](std::size_t k, std::size_t l) {
    Integer twice = 2 * lam[k][l];
    if (abs(twice) <= d[l]) return;
    const Integer q = round_div(lam[k][l], d[l]);
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 1;
  auto swap = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    const Integer B = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = B;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i)
          u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (d[k] == 0)
            throw Error(ErrorCode::InvalidArgument,
                        "lll_reduce: basis vectors are linearly dependent");
        }
      }
    }
    while (true) {
      red(k, k - 1);
      const Integer& l = lam[k][k - 1];
      if (dq * (d[k] * d[k - 2] + l * l) < dp * d[k - 1] * d[k - 1]) {
        swap(k);
        k = std::max<std::size_t>(2, k - 1);
        continue;
      }
      for (std::size_t l2 = k - 1; l2-- > 1;) red(k, l2);
      ++k;
      break;
    }
  }

  std::vector<Rational> gs(n);
  for (std::size_t t = 1; t <= n; ++t) {
    basis[t - 1] = std::move(b[t]);
    gs[t - 1] = Rational(d[t], d[t - 1]);
    gs[t - 1].canonicalize();
  }
  return gs;
}

RelationCheck verify_relation(const std::vector<FixedPointValue>& values,
                              const std::vector<Integer>& coefficients) {
  if (values.size() != coefficients.size())
    throw Error(ErrorCode::InvalidArgument,
                "verify_relation: values and coefficients differ in length");
  if (std::all_of(coefficients.begin(), coefficients.end(),
                  [](const Integer& c) { return c == 0; }))
    throw Error(ErrorCode::InvalidArgument,
                "verify_relation: all-zero coefficient vector");
  RelationCheck out;
  Rational sum = 0;
  out.tolerance = 0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    sum += Rational(coefficients[t]) * values[t].to_rational();
    out.tolerance += Rational(abs(coefficients[t])) * values[t].error_bound;
  }
  out.residual = abs(sum);
  out.pass = out.residual <= out.tolerance;
  return out;
}

RelationSearch find_relation(const RelationQuery& query) {
  const auto& values = query.values;
  const std::size_t n = values.size();
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "find_relation: need >= 2 values");
  if (query.precision < 50)
    throw Error(ErrorCode::InvalidArgument, "find_relation: precision >= 50");
  if (query.coeff_bound < 1)
    throw Error(ErrorCode::InvalidArgument, "find_relation: coeff_bound >= 1");
  const std::uint64_t b = values.front().base;
  for (const auto& v : values) {
    if (v.base != b)
      throw Error(ErrorCode::InvalidArgument,
                  "find_relation: all values must share one base");
  }

  std::vector<Rational> exact(n);
  Rational largest = 0;
  for (std::size_t t = 0; t < n; ++t) {
    exact[t] = values[t].to_rational();
    largest = std::max(largest, Rational(abs(exact[t])));
  }
  if (largest == 0)
    throw Error(ErrorCode::InvalidArgument, "find_relation: all values are zero");
  const long e = magnitude(largest, b);
  const long prec = static_cast<long>(query.precision);
  const Rational slack = pow_b(b, e - prec / 2);
  for (std::size_t t = 0; t < n; ++t) {
    if (values[t].error_bound > slack)
      throw Error(ErrorCode::PrecisionTooLow,
                  "find_relation: value " + std::to_string(t) +
                      " is not accurate to b^(e - precision/2)");
  }

  const Rational K = pow_b(b, prec - e);
  std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n + 1, Integer(0)));
  for (std::size_t t = 0; t < n; ++t) {
    basis[t][t] = 1;
    basis[t][n] = round_rational(exact[t] * K);
  }
  const std::vector<Rational> gs = lll_reduce(basis);

  RelationSearch out;
  out.coeff_bound = query.coeff_bound;
  out.precision = query.precision;
  out.lattice_floor_sq = *std::min_element(gs.begin(), gs.end());
  Rational per_value = 0;
  for (const auto& v : values) per_value += K * v.error_bound + Rational(1, 2);
  const Rational B(query.coeff_bound);
  const Rational tail = B * per_value;
  out.relation_norm_sq = Rational(static_cast<unsigned long>(n)) * B * B + tail * tail;

  bool have_floor = false;
  Integer best_norm;
  for (const auto& row : basis) {
    std::vector<Integer> c(row.begin(), row.begin() + static_cast<long>(n));
    if (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; }))
      continue;
    auto first_nz = std::find_if(c.begin(), c.end(),
                                 [](const Integer& x) { return x != 0; });
    if (sgn(*first_nz) < 0)
      for (auto& x : c) x = -x;
    const RelationCheck chk = verify_relation(values, c);
    if (!have_floor || chk.residual < out.residual_floor) {
      out.residual_floor = chk.residual;
      have_floor = true;
    }
    const bool bounded = std::all_of(c.begin(), c.end(), [&](const Integer& x) {
      return abs(x) <= query.coeff_bound;
    });
    const Rational tolerance = chk.tolerance + slack;
    if (!bounded || chk.residual > tolerance) continue;
    const Integer norm = dot(c, c);
    if (!out.relation || norm < best_norm) {
      best_norm = norm;
      out.relation = IntegerRelation{std::move(c), chk.residual, tolerance};
    }
  }
  return out;
}

}  // namespace lacunary
