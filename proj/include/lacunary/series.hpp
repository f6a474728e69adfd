#pragma once

// Base-b evaluation of lacunary series sum_{n in S} a(n) b^{-i n^j}, their
// coefficient sequences e(n), and integer linear forms over them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lacunary/sets.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

/// Number of base-b guard digits carried past the requested precision.
constexpr std::size_t kGuardDigits = 16;

/// Bounded, nonzero, integer-valued coefficient function a(n).
class Coefficient {
 public:
  struct Constant {
    long value = 1;
  };
  /// value * (-1)^n
  struct Alternating {
    long value = 1;
  };
  struct Table {
    std::map<Integer, long> entries;
    long fallback = 1;  // used for members missing from the table
  };
  using Kind = std::variant<Constant, Alternating, Table>;

  Coefficient() : Coefficient(Constant{1}) {}
  explicit Coefficient(Kind kind);

  static Coefficient constant(long c) { return Coefficient(Constant{c}); }
  static Coefficient alternating(long c = 1) {
    return Coefficient(Alternating{c});
  }
  static Coefficient table(std::map<Integer, long> entries, long fallback) {
    return Coefficient(Table{std::move(entries), fallback});
  }

  long at(const Integer& n) const;
  /// C1: the declared bound on |a(n)|.
  const Integer& bound() const { return bound_; }
  const Kind& kind() const { return kind_; }

 private:
  Kind kind_;
  Integer bound_;
};

struct SeriesSpec {
  std::uint64_t i = 1;
  unsigned j = 2;
  ExponentSet set = ExponentSet::naturals();
  Coefficient coeff;

  void validate() const;
};

/// mantissa / base^scale, within error_bound of the true value.
struct FixedPointValue {
  std::uint64_t base = 2;
  Integer mantissa;
  std::size_t scale = 1;
  Rational error_bound;

  static FixedPointValue exact(std::uint64_t base, const Integer& value,
                               std::size_t scale);

  Rational to_rational() const;
  /// Same number at a finer scale (exact, error unchanged).
  FixedPointValue rescaled(std::size_t new_scale) const;
  std::string to_decimal(std::size_t places) const;
};

/// sum of a(n) b^(cutoff - i n^j) over members with i n^j <= cutoff: the
/// series truncated at exponent `cutoff`, as an integer at scale `cutoff`.
Integer partial_sum(const SeriesSpec& spec, std::uint64_t b,
                    std::size_t cutoff);

/// Rigorous bound on the terms omitted by partial_sum(spec, b, cutoff).
Rational truncation_bound(const SeriesSpec& spec, std::uint64_t b,
                          std::size_t cutoff);

/// Evaluates with kGuardDigits extra digits; the result has
/// scale = digits + kGuardDigits.
FixedPointValue eval_series(const SeriesSpec& spec, std::uint64_t b,
                            std::size_t digits);

struct LinearTerm {
  Integer weight;
  SeriesSpec spec;
};

/// c + sum_t weight_t * f_t(1/b).
struct LinearFormSpec {
  std::uint64_t base = 2;
  Integer constant = 0;
  std::vector<LinearTerm> terms;

  /// C1: largest coefficient bound over the terms.
  Integer c1() const;
  /// C2 = C1 * sum |weight|.
  Integer c2() const;
  void validate() const;
};

/// sum_t weight_t * e_t(n), where e_t(n) = a_t(k) when n = i_t k^j_t with
/// k in the term's set and 0 otherwise.
Integer coefficient_at(const LinearFormSpec& form, const Integer& n);

struct ZeroRun {
  std::uint64_t start = 0;
  std::uint64_t length = 0;

  friend bool operator==(const ZeroRun&, const ZeroRun&) = default;
};

/// Maximal runs of consecutive zero coefficients inside [start, end].
std::vector<ZeroRun> gap_scan(const LinearFormSpec& form, std::uint64_t start,
                              std::uint64_t end);

/// True iff coefficient_at(form, center +- u) == 0 for u = 1..N-1. Uses root
/// tests only, so `center` may be far beyond anything enumerable.
bool exclusion_window_check(const LinearFormSpec& form, const Integer& center,
                            std::uint64_t N);

FixedPointValue eval_linear_form(const LinearFormSpec& form,
                                 std::size_t digits);

/// C2 b^-N + 2 C2 b^-2N, which bounds |b^(n0-N) P_N| for every split point
/// n0 of the linear form's digit sequence.
Rational tail_bound(const LinearFormSpec& form, std::uint64_t N);

struct RenderedDigits {
  std::uint64_t base = 2;
  bool negative = false;
  Integer integer_part;
  std::vector<unsigned> digits;  // fractional digits, most significant first
  // Leading digits guaranteed by the error bound; the rest may flip under
  // a carry from the uncertain tail.
  std::size_t certain = 0;

  /// Digits as characters 0-9a-z; requires base <= 36.
  std::string str() const;
};

RenderedDigits render_digits(const FixedPointValue& v, std::size_t count);

}  // namespace lacunary
