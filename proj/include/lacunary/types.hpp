#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lacunary {

using Integer = mpz_class;
using Rational = mpq_class;

/// One index pair (i, j) of a lacunary family: the series sum_n a(n) b^{-i n^j}.
struct IndexPair {
  std::uint64_t i = 1;
  unsigned j = 2;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(const IndexPair& p);

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Integer make_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

inline Integer make_integer(std::int64_t v) {
  Integer z = make_integer(static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v));
  if (v < 0) z = -z - 1;
  return z;
}

inline bool fits_u64(const Integer& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& n) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

/// b^e as an arbitrary-precision integer.
inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Integer ipow(std::uint64_t b, unsigned long e) {
  return ipow(make_integer(b), e);
}

}  // namespace lacunary
