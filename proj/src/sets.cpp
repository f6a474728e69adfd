#include "lacunary/sets.hpp"

#include <algorithm>
#include <numeric>

#include "lacunary/arith.hpp"
#include "lacunary/error.hpp"
#include "lacunary/pell.hpp"

namespace lacunary {

namespace {

// Sieve-backed enumeration materializes every candidate up to the limit.
constexpr std::uint64_t kSieveCap = 100'000'000;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t sieve_limit(const Integer& limit) {
  if (!fits_u64(limit) || to_u64(limit) > kSieveCap) {
    throw Error(ErrorCode::InvalidArgument,
                "set_enumerate: limit " + limit.get_str() +
                    " exceeds the sieve cap of 10^8 for this set kind");
  }
  return to_u64(limit);
}

bool is_power_of_two_multiple_of(const Integer& q, unsigned j) {
  // q == 2^(j m) for some m >= 0
  if (sgn(q) <= 0) return false;
  const auto e = mpz_scan1(q.get_mpz_t(), 0);
  if (mpz_sizeinbase(q.get_mpz_t(), 2) != e + 1) return false;
  return e % j == 0;
}

bool pell_has_x(std::uint64_t D, const Integer& n) {
  bool found = false;
  pell_walk(D, [&](const Integer& x, const Integer&) {
    if (x == n) found = true;
    return x < n;
  });
  return found;
}

bool pell_has_y(std::uint64_t D, const Integer& n) {
  bool found = false;
  pell_walk(D, [&](const Integer&, const Integer& y) {
    if (y == n) found = true;
    return y < n;
  });
  return found;
}

}  // namespace

ExponentSet::ExponentSet(Kind kind, std::optional<Integer> min)
    : kind_(std::move(kind)), min_(std::move(min)) {
  std::visit(
      overloaded{
          [](const set_kind::PrimesInAP& k) {
            if (k.d == 0 || k.h == 0 || std::gcd(k.d, k.h) != 1)
              throw Error(ErrorCode::InvalidArgument,
                          "primes_in_ap: d, h must be positive and coprime");
          },
          [](const set_kind::Progression& k) {
            if (k.d == 0)
              throw Error(ErrorCode::InvalidArgument, "progression: d >= 1");
          },
          [](const set_kind::Explicit& k) {
            for (std::size_t t = 0; t < k.values.size(); ++t) {
              if (sgn(k.values[t]) <= 0 ||
                  (t > 0 && k.values[t] <= k.values[t - 1]))
                throw Error(ErrorCode::InvalidArgument,
                            "explicit: values must be positive and strictly "
                            "increasing");
            }
          },
          [](const set_kind::Geometric& k) {
            if (k.u == 0 || k.j < 2)
              throw Error(ErrorCode::InvalidArgument,
                          "geometric: u >= 1 and j >= 2 required");
          },
          [](const set_kind::PellX& k) {
            if (int_nth_root(make_integer(k.D), 2).exact)
              throw Error(ErrorCode::SquareD,
                          "pell_x: D=" + std::to_string(k.D) + " is a square");
          },
          [](const set_kind::PellY& k) {
            if (int_nth_root(make_integer(k.D), 2).exact)
              throw Error(ErrorCode::SquareD,
                          "pell_y: D=" + std::to_string(k.D) + " is a square");
            if (k.scale == 0)
              throw Error(ErrorCode::InvalidArgument, "pell_y: scale >= 1");
          },
          [](const auto&) {},
      },
      kind_);
}

std::string ExponentSet::name() const {
  return std::visit(
      overloaded{
          [](const set_kind::Naturals&) { return "naturals"; },
          [](const set_kind::Primes&) { return "primes"; },
          [](const set_kind::PrimesInAP&) { return "primes_in_ap"; },
          [](const set_kind::Progression&) { return "progression"; },
          [](const set_kind::Squarefree&) { return "squarefree"; },
          [](const set_kind::Explicit&) { return "explicit"; },
          [](const set_kind::Geometric&) { return "geometric"; },
          [](const set_kind::PellX&) { return "pell_x"; },
          [](const set_kind::PellY&) { return "pell_y"; },
      },
      kind_);
}

bool ExponentSet::contains(const Integer& n) const {
  if (sgn(n) <= 0) return false;
  if (min_ && n < *min_) return false;
  return std::visit(
      overloaded{
          [](const set_kind::Naturals&) { return true; },
          [&](const set_kind::Primes&) { return is_prime(n); },
          [&](const set_kind::PrimesInAP& k) {
            return mpz_fdiv_ui(n.get_mpz_t(), k.d) == k.h % k.d && is_prime(n);
          },
          [&](const set_kind::Progression& k) {
            return mpz_fdiv_ui(n.get_mpz_t(), k.d) == k.h % k.d;
          },
          [&](const set_kind::Squarefree&) { return factor(n).squarefree(); },
          [&](const set_kind::Explicit& k) {
            return std::binary_search(k.values.begin(), k.values.end(), n);
          },
          [&](const set_kind::Geometric& k) {
            if (!mpz_divisible_ui_p(n.get_mpz_t(), k.u)) return false;
            Integer q;
            mpz_divexact_ui(q.get_mpz_t(), n.get_mpz_t(), k.u);
            return is_power_of_two_multiple_of(q, k.j);
          },
          [&](const set_kind::PellX& k) { return pell_has_x(k.D, n); },
          [&](const set_kind::PellY& k) {
            if (!mpz_divisible_ui_p(n.get_mpz_t(), k.scale)) return false;
            Integer y;
            mpz_divexact_ui(y.get_mpz_t(), n.get_mpz_t(), k.scale);
            return pell_has_y(k.D, y);
          },
      },
      kind_);
}

std::vector<Integer> ExponentSet::enumerate(const Integer& limit) const {
  std::vector<Integer> out;
  if (sgn(limit) <= 0) return out;
  std::visit(
      overloaded{
          [&](const set_kind::Naturals&) {
            const auto L = sieve_limit(limit);
            for (std::uint64_t n = 1; n <= L; ++n) out.push_back(make_integer(n));
          },
          [&](const set_kind::Primes&) {
            for (auto p : primes_up_to(sieve_limit(limit)))
              out.push_back(make_integer(p));
          },
          [&](const set_kind::PrimesInAP& k) {
            for (auto p : primes_up_to(sieve_limit(limit)))
              if (p % k.d == k.h % k.d) out.push_back(make_integer(p));
          },
          [&](const set_kind::Progression& k) {
            const auto L = sieve_limit(limit);
            std::uint64_t n = k.h % k.d;
            if (n == 0) n = k.d;
            for (; n <= L; n += k.d) out.push_back(make_integer(n));
          },
          [&](const set_kind::Squarefree&) {
            const auto L = sieve_limit(limit);
            std::vector<bool> bad(L + 1, false);
            for (std::uint64_t p = 2; p * p <= L; ++p) {
              for (std::uint64_t q = p * p; q <= L; q += p * p) bad[q] = true;
            }
            for (std::uint64_t n = 1; n <= L; ++n)
              if (!bad[n]) out.push_back(make_integer(n));
          },
          [&](const set_kind::Explicit& k) {
            for (const auto& v : k.values) {
              if (v > limit) break;
              out.push_back(v);
            }
          },
          [&](const set_kind::Geometric& k) {
            Integer n = make_integer(k.u);
            while (n <= limit) {
              out.push_back(n);
              n <<= k.j;
            }
          },
          [&](const set_kind::PellX& k) {
            pell_walk(k.D, [&](const Integer& x, const Integer&) {
              if (x > limit) return false;
              out.push_back(x);
              return true;
            });
          },
          [&](const set_kind::PellY& k) {
            const Integer scale = make_integer(k.scale);
            pell_walk(k.D, [&](const Integer&, const Integer& y) {
              Integer n = scale * y;
              if (n > limit) return false;
              out.push_back(std::move(n));
              return true;
            });
          },
      },
      kind_);
  if (min_) {
    std::erase_if(out, [&](const Integer& n) { return n < *min_; });
  }
  return out;
}

std::optional<Integer> is_exponent_image(const Integer& n, std::uint64_t i,
                                         unsigned j, const ExponentSet& s) {
  if (sgn(n) <= 0 || i == 0 || j < 2) return std::nullopt;
  if (!mpz_divisible_ui_p(n.get_mpz_t(), i)) return std::nullopt;
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), n.get_mpz_t(), i);
  RootResult r = int_nth_root(q, j);
  if (!r.exact || sgn(r.root) <= 0) return std::nullopt;
  if (!s.contains(r.root)) return std::nullopt;
  return r.root;
}

}  // namespace lacunary
