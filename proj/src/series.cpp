#include "lacunary/series.hpp"

#include <algorithm>
#include <cstdlib>

#include "lacunary/arith.hpp"
#include "lacunary/error.hpp"

namespace lacunary {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow_rational(std::uint64_t b, long e) {
  if (e >= 0) return Rational(ipow(b, static_cast<unsigned long>(e)));
  Rational q(Integer(1), ipow(b, static_cast<unsigned long>(-e)));
  q.canonicalize();
  return q;
}

void check_base(std::uint64_t b) {
  if (b < 2) throw Error(ErrorCode::InvalidArgument, "base b must be >= 2");
}

/// Largest k with i k^j <= cutoff.
Integer index_limit(std::uint64_t i, unsigned j, std::size_t cutoff) {
  Integer q = make_integer(static_cast<std::uint64_t>(cutoff)) / make_integer(i);
  return int_nth_root(q, j).root;
}

}  // namespace

Coefficient::Coefficient(Kind kind) : kind_(std::move(kind)) {
  std::visit(
      overloaded{
          [&](const Constant& c) {
            if (c.value == 0)
              throw Error(ErrorCode::InvalidArgument,
                          "coefficient: constant must be nonzero");
            bound_ = std::labs(c.value);
          },
          [&](const Alternating& c) {
            if (c.value == 0)
              throw Error(ErrorCode::InvalidArgument,
                          "coefficient: alternating amplitude must be nonzero");
            bound_ = std::labs(c.value);
          },
          [&](const Table& t) {
            if (t.fallback == 0)
              throw Error(ErrorCode::InvalidArgument,
                          "coefficient: table fallback must be nonzero");
            long m = std::labs(t.fallback);
            for (const auto& [n, v] : t.entries) {
              if (v == 0)
                throw Error(ErrorCode::InvalidArgument,
                            "coefficient: table value at " + n.get_str() +
                                " is zero");
              m = std::max(m, std::labs(v));
            }
            bound_ = m;
          },
      },
      kind_);
}

long Coefficient::at(const Integer& n) const {
  return std::visit(
      overloaded{
          [](const Constant& c) { return c.value; },
          [&](const Alternating& c) {
            return mpz_odd_p(n.get_mpz_t()) ? -c.value : c.value;
          },
          [&](const Table& t) {
            auto it = t.entries.find(n);
            return it == t.entries.end() ? t.fallback : it->second;
          },
      },
      kind_);
}

void SeriesSpec::validate() const {
  if (i == 0) throw Error(ErrorCode::InvalidArgument, "series: i must be >= 1");
  if (j < 2) throw Error(ErrorCode::InvalidArgument, "series: j must be >= 2");
}

FixedPointValue FixedPointValue::exact(std::uint64_t base,
                                       const Integer& value,
                                       std::size_t scale) {
  return {base, value * ipow(base, scale), scale, Rational(0)};
}

Rational FixedPointValue::to_rational() const {
  Rational q(mantissa, ipow(base, scale));
  q.canonicalize();
  return q;
}

FixedPointValue FixedPointValue::rescaled(std::size_t new_scale) const {
  if (new_scale < scale)
    throw Error(ErrorCode::InvalidArgument,
                "rescaled: cannot drop digits without rounding");
  return {base, mantissa * ipow(base, new_scale - scale), new_scale,
          error_bound};
}

std::string FixedPointValue::to_decimal(std::size_t places) const {
  const Rational q = to_rational();
  const bool neg = sgn(q) < 0;
  Rational a = abs(q);
  const Integer whole = floor_rational(a);
  const Integer frac = floor_rational((a - whole) * ipow(10, places));
  std::string digits = frac.get_str();
  if (digits.size() < places) digits.insert(0, places - digits.size(), '0');
  std::string out = (neg ? "-" : "") + whole.get_str();
  if (places > 0) out += "." + digits;
  return out;
}

Integer partial_sum(const SeriesSpec& spec, std::uint64_t b,
                    std::size_t cutoff) {
  spec.validate();
  check_base(b);
  Integer total = 0;
  const Integer kmax = index_limit(spec.i, spec.j, cutoff);
  if (kmax < 1) return total;
  const Integer bb = make_integer(b);
  for (const Integer& k : spec.set.enumerate(kmax)) {
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), k.get_mpz_t(), spec.j);
    e *= make_integer(spec.i);
    const auto shift = static_cast<unsigned long>(cutoff - to_u64(e));
    total += spec.coeff.at(k) * ipow(bb, shift);
  }
  return total;
}

Rational truncation_bound(const SeriesSpec& spec, std::uint64_t b,
                          std::size_t cutoff) {
  check_base(b);
  if (const auto* ex = std::get_if<set_kind::Explicit>(&spec.set.kind())) {
    const Integer kmax = index_limit(spec.i, spec.j, cutoff);
    const bool omitted = std::any_of(
        ex->values.begin(), ex->values.end(),
        [&](const Integer& v) { return v > kmax && spec.set.contains(v); });
    if (!omitted) return Rational(0);
  }
  // Omitted exponents are distinct integers > cutoff, so the tail is at most
  // C1 * sum_{m > cutoff} b^-m.
  Rational r(spec.coeff.bound(), ipow(b, cutoff) * (make_integer(b) - 1));
  r.canonicalize();
  return r;
}

FixedPointValue eval_series(const SeriesSpec& spec, std::uint64_t b,
                            std::size_t digits) {
  if (digits < 1)
    throw Error(ErrorCode::InvalidArgument, "eval_series: digits must be >= 1");
  const std::size_t scale = digits + kGuardDigits;
  return {b, partial_sum(spec, b, scale), scale,
          truncation_bound(spec, b, scale)};
}

Integer LinearFormSpec::c1() const {
  Integer m = 0;
  for (const auto& t : terms) m = std::max(m, t.spec.coeff.bound());
  return m;
}

Integer LinearFormSpec::c2() const {
  Integer s = 0;
  for (const auto& t : terms) s += abs(t.weight);
  return c1() * s;
}

void LinearFormSpec::validate() const {
  check_base(base);
  for (const auto& t : terms) t.spec.validate();
}

Integer coefficient_at(const LinearFormSpec& form, const Integer& n) {
  Integer total = 0;
  for (const auto& t : form.terms) {
    if (auto k = is_exponent_image(n, t.spec.i, t.spec.j, t.spec.set)) {
      total += t.weight * t.spec.coeff.at(*k);
    }
  }
  return total;
}

std::vector<ZeroRun> gap_scan(const LinearFormSpec& form, std::uint64_t start,
                              std::uint64_t end) {
  if (start < 1 || start > end)
    throw Error(ErrorCode::InvalidArgument, "gap_scan: need 1 <= start <= end");
  // Collect the nonzero positions by enumerating each term's members, then
  // read the gaps between them.
  std::map<std::uint64_t, Integer> coeffs;
  for (const auto& t : form.terms) {
    const Integer kmax =
        int_nth_root(make_integer(end) / make_integer(t.spec.i), t.spec.j).root;
    if (kmax < 1) continue;
    for (const Integer& k : t.spec.set.enumerate(kmax)) {
      Integer pos;
      mpz_pow_ui(pos.get_mpz_t(), k.get_mpz_t(), t.spec.j);
      pos *= make_integer(t.spec.i);
      const auto p = to_u64(pos);
      if (p < start) continue;
      coeffs[p] += t.weight * t.spec.coeff.at(k);
    }
  }
  std::vector<ZeroRun> runs;
  std::uint64_t cursor = start;
  auto close = [&](std::uint64_t upto) {
    if (upto > cursor) runs.push_back({cursor, upto - cursor});
  };
  for (const auto& [p, c] : coeffs) {
    if (c == 0) continue;
    close(p);
    cursor = p + 1;
  }
  if (end >= cursor) runs.push_back({cursor, end - cursor + 1});
  return runs;
}

bool exclusion_window_check(const LinearFormSpec& form, const Integer& center,
                            std::uint64_t N) {
  if (N < 1)
    throw Error(ErrorCode::InvalidArgument, "exclusion_window_check: N >= 1");
  if (center <= make_integer(N))
    throw Error(ErrorCode::InvalidArgument,
                "exclusion_window_check: center must exceed N");
  for (std::uint64_t u = 1; u < N; ++u) {
    const Integer off = make_integer(u);
    if (coefficient_at(form, center + off) != 0) return false;
    if (coefficient_at(form, center - off) != 0) return false;
  }
  return true;
}

FixedPointValue eval_linear_form(const LinearFormSpec& form,
                                 std::size_t digits) {
  form.validate();
  if (digits < 1)
    throw Error(ErrorCode::InvalidArgument,
                "eval_linear_form: digits must be >= 1");
  const std::size_t scale = digits + kGuardDigits;
  FixedPointValue v = FixedPointValue::exact(form.base, form.constant, scale);
  for (const auto& t : form.terms) {
    if (t.weight == 0) continue;
    v.mantissa += t.weight * partial_sum(t.spec, form.base, scale);
    v.error_bound += Rational(abs(t.weight)) *
                     truncation_bound(t.spec, form.base, scale);
  }
  return v;
}

Rational tail_bound(const LinearFormSpec& form, std::uint64_t N) {
  check_base(form.base);
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "tail_bound: N >= 1");
  const Rational c2(form.c2());
  const long n = static_cast<long>(N);
  return c2 * pow_rational(form.base, -n) +
         2 * c2 * pow_rational(form.base, -2 * n);
}

std::string RenderedDigits::str() const {
  if (base > 36)
    throw Error(ErrorCode::InvalidArgument,
                "render: bases above 36 have no character digits");
  static constexpr char kChars[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s;
  s.reserve(digits.size());
  for (unsigned d : digits) s.push_back(kChars[d]);
  return s;
}

RenderedDigits render_digits(const FixedPointValue& v, std::size_t count) {
  if (count > v.scale)
    throw Error(ErrorCode::InvalidArgument,
                "render_digits: count exceeds the value's scale");
  RenderedDigits out;
  out.base = v.base;
  out.negative = sgn(v.mantissa) < 0;
  const Integer a = abs(v.mantissa);
  const Integer denom = ipow(v.base, v.scale);
  Integer frac;
  mpz_fdiv_qr(out.integer_part.get_mpz_t(), frac.get_mpz_t(), a.get_mpz_t(),
              denom.get_mpz_t());
  Integer top = frac / ipow(v.base, v.scale - count);
  out.digits.assign(count, 0);
  for (std::size_t t = count; t-- > 0;) {
    out.digits[t] = static_cast<unsigned>(mpz_fdiv_ui(top.get_mpz_t(), v.base));
    top /= make_integer(v.base);
  }

  Rational abs_value(a, denom);
  abs_value.canonicalize();
  const Rational lo = abs_value - v.error_bound;
  const Rational hi = abs_value + v.error_bound;
  if (v.error_bound == 0) {
    out.certain = count;
    return out;
  }
  Integer pw = 1;
  const Integer bb = make_integer(v.base);
  if (floor_rational(lo) != floor_rational(hi)) return out;
  for (std::size_t k = 1; k <= count; ++k) {
    pw *= bb;
    if (floor_rational(lo * pw) != floor_rational(hi * pw)) break;
    out.certain = k;
  }
  return out;
}

}  // namespace lacunary
