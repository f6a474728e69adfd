#include "lacunary/dependence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lacunary/arith.hpp"
#include "lacunary/error.hpp"

namespace lacunary {

FamilyIndex::FamilyIndex(std::vector<IndexPair> pairs)
    : pairs_(std::move(pairs)) {
  std::set<IndexPair> seen;
  for (const auto& p : pairs_) {
    if (p.i < 1 || p.j < 2)
      throw Error(ErrorCode::InvalidArgument,
                  "family: pair " + to_string(p) + " needs i >= 1, j >= 2");
    if (!seen.insert(p).second)
      throw Error(ErrorCode::InvalidArgument,
                  "family: duplicate pair " + to_string(p));
  }
}

std::optional<ConditionIViolation> condition_i_witness(const IndexPair& a,
                                                       const IndexPair& b) {
  if (a == b)
    throw Error(ErrorCode::InvalidArgument,
                "condition (i) compares distinct pairs only");
  const Factorization fa = factor(make_integer(a.i));
  const Factorization fb = factor(make_integer(b.i));
  std::set<Integer> primes;
  for (const auto& f : fa.factors) primes.insert(f.prime);
  for (const auto& f : fb.factors) primes.insert(f.prime);

  const long ja = a.j, jb = b.j;
  const long g = std::gcd(ja, jb);
  ConditionIViolation w{0, 1, Integer(1), Integer(1)};
  for (const auto& p : primes) {
    const long oa = fa.order(p), ob = fb.order(p);
    if ((ob - oa) % g != 0) return std::nullopt;
    // smallest s >= 0 with oa + ja s = ob + jb t for some t >= 0
    long s = 0;
    while ((oa + ja * s - ob) % jb != 0 || oa + ja * s < ob) ++s;
    const long t = (oa + ja * s - ob) / jb;
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(s));
    w.u *= pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(t));
    w.v *= pe;
  }
  return w;
}

std::vector<ConditionIViolation> check_condition_i(const FamilyIndex& family) {
  std::vector<ConditionIViolation> out;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (auto w = condition_i_witness(family[a], family[b])) {
        w->first = a;
        w->second = b;
        out.push_back(std::move(*w));
      }
    }
  }
  return out;
}

std::vector<IndexPair> check_condition_ii(const FamilyIndex& family) {
  std::vector<IndexPair> out;
  for (const auto& p : family.pairs())
    if (p.j == 2) out.push_back(p);
  return out;
}

FamilyVerdict check_family(const FamilyIndex& family) {
  return {check_condition_i(family), check_condition_ii(family)};
}

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::ScaledSets ? "scaled_sets" : "pell";
}

LinearFormSpec DependencyCertificate::form() const {
  LinearFormSpec f;
  f.base = base;
  f.constant = w0;
  f.terms.push_back({w1, SeriesSpec{first.i, first.j, t1, Coefficient::constant(1)}});
  f.terms.push_back({w2, SeriesSpec{second.i, second.j, t2, Coefficient::constant(1)}});
  return f;
}

bool verify_certificate(DependencyCertificate& cert) {
  const FixedPointValue v = eval_linear_form(cert.form(), cert.precision);
  cert.residual = abs(v.to_rational());
  cert.error_bound = v.error_bound;
  cert.verified = cert.residual <= cert.error_bound;
  return cert.verified;
}

DependencyCertificate build_counterexample(const IndexPair& first,
                                           const IndexPair& second,
                                           std::uint64_t b,
                                           std::size_t precision) {
  if (b < 2) throw Error(ErrorCode::InvalidArgument, "counterexample: b >= 2");
  if (precision < 1)
    throw Error(ErrorCode::InvalidArgument, "counterexample: precision >= 1");
  FamilyIndex family({first, second});

  DependencyCertificate cert;
  cert.first = first;
  cert.second = second;
  cert.base = b;
  cert.precision = precision;

  if (auto w = condition_i_witness(first, second)) {
    if (!fits_u64(w->u) || !fits_u64(w->v))
      throw Error(ErrorCode::InvalidArgument,
                  "counterexample: witness too large for a geometric set");
    cert.kind = CertificateKind::ScaledSets;
    cert.t1 = ExponentSet::geometric(to_u64(w->u), second.j);
    cert.t2 = ExponentSet::geometric(to_u64(w->v), first.j);
    cert.w0 = 0;
    cert.w1 = 1;
    cert.w2 = -1;
  } else if (first.j == 2 && second.j == 2 &&
             !int_nth_root(make_integer(first.i) * make_integer(second.i), 2)
                  .exact) {
    const std::uint64_t D = first.i * second.i;
    cert.kind = CertificateKind::Pell;
    cert.t1 = ExponentSet::pell_x(D);
    cert.t2 = ExponentSet::pell_y(D, first.i);
    cert.w0 = 0;
    cert.w1 = ipow(b, first.i);
    cert.w2 = -1;
  } else {
    throw Error(ErrorCode::NotApplicable,
                "counterexample: " + to_string(first) + ", " +
                    to_string(second) +
                    " satisfy condition (i) and are not both quadratic");
  }
  verify_certificate(cert);
  return cert;
}

std::vector<EquationSolution> enumerate_equation_solutions(
    std::uint64_t i0, unsigned j0, std::uint64_t i, unsigned j,
    std::uint64_t u_max, std::uint64_t x_max) {
  if (i0 < 1 || i < 1 || j0 < 2 || j < 2)
    throw Error(ErrorCode::InvalidArgument,
                "diophantine: need i, i0 >= 1 and j, j0 >= 2");
  if (i0 == i && j0 == j)
    throw Error(ErrorCode::InvalidArgument,
                "diophantine: the two pairs must differ");
  if (u_max < 1 || x_max < 1)
    throw Error(ErrorCode::InvalidArgument,
                "diophantine: u_max and x_max must be >= 1");
  const ExponentSet naturals = ExponentSet::naturals();
  const Integer ii0 = make_integer(i0);
  std::vector<EquationSolution> out;
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    const Integer xx = make_integer(x);
    Integer lhs;
    mpz_pow_ui(lhs.get_mpz_t(), xx.get_mpz_t(), j0);
    lhs *= ii0;
    for (std::uint64_t u = 1; u <= u_max; ++u) {
      for (int sign : {-1, 1}) {
        // i y^j = i0 x^j0 - sign u
        const Integer target = lhs - sign * make_integer(u);
        if (auto y = is_exponent_image(target, i, j, naturals)) {
          out.push_back({xx, *y, u, sign});
        }
      }
    }
  }
  return out;
}

}  // namespace lacunary
