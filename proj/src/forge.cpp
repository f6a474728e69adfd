#include "lacunary/forge.hpp"

#include <algorithm>
#include <cstdlib>

#include "lacunary/error.hpp"
#include "lacunary/series.hpp"
#include "lacunary/sets.hpp"

namespace lacunary {

namespace {

Integer g_value(unsigned k, std::uint64_t u, std::int64_t v, const Integer& x) {
  Integer t;
  mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), k);
  return make_integer(u) * t + make_integer(v);
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1
               : static_cast<std::uint64_t>(v);
}

LinearFormSpec family_form(const std::vector<IndexPair>& family) {
  LinearFormSpec form;
  for (const auto& p : family) {
    form.terms.push_back({Integer(1), SeriesSpec{p.i, p.j, ExponentSet::naturals(),
                                                 Coefficient::constant(1)}});
  }
  return form;
}

}  // namespace

Integer LemmaOneWitness::value() const { return g_value(k, u, v, x); }

bool LemmaOneWitness::verify() const {
  if (!is_prime(p)) return false;
  const Integer pp = p * p;
  return mod(value(), pp) == p;
}

Integer hensel_step(unsigned k, std::uint64_t u, std::int64_t v,
                    const Integer& p, const Integer& x) {
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, "hensel_step: p must be prime");
  const Integer g = g_value(k, u, v, x);
  if (mod(g, p) != 0)
    throw Error(ErrorCode::InvalidArgument,
                "hensel_step: x is not a root of u X^k + v mod p");
  Integer xk1;
  mpz_pow_ui(xk1.get_mpz_t(), x.get_mpz_t(), k - 1);
  const Integer deriv = mod(make_integer(static_cast<std::uint64_t>(k)) *
                                make_integer(u) * xk1,
                            p);
  if (deriv == 0)
    throw Error(ErrorCode::SingularDerivative,
                "hensel_step: g'(x) = 0 mod " + p.get_str());
  Integer inv;
  mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), p.get_mpz_t());
  Integer g_over_p;
  mpz_divexact(g_over_p.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
  const Integer y = mod((1 - g_over_p) * inv, p);
  return p * y + x;
}

std::vector<LemmaOneWitness> lemma1_find(unsigned k, std::uint64_t u,
                                         std::int64_t v, std::size_t count,
                                         const Integer& p_min,
                                         std::set<Integer>* used,
                                         const SearchBudget& budget) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "lemma1_find: k >= 2");
  if (u < 1) throw Error(ErrorCode::InvalidArgument, "lemma1_find: u >= 1");
  if (v == 0)
    throw Error(ErrorCode::InvalidArgument, "lemma1_find: v must be nonzero");
  if (count < 1)
    throw Error(ErrorCode::InvalidArgument, "lemma1_find: count >= 1");

  std::set<Integer> local;
  std::set<Integer>& taken = used ? *used : local;
  Integer floor_p = p_min;
  for (std::uint64_t c : {std::uint64_t{k}, u, abs_u64(v)})
    floor_p = std::max(floor_p, make_integer(c));

  std::vector<LemmaOneWitness> out;
  for (std::uint64_t m = 1; m <= budget.scan; ++m) {
    const Integer mm = make_integer(m);
    const Integer g = g_value(k, u, v, mm);
    if (g == 0) continue;
    for (const auto& f : factor(abs(g), budget.factor).factors) {
      const Integer& p = f.prime;
      if (p <= floor_p || taken.count(p)) continue;
      // Only simple roots lift; p > max(k, u, |v|) makes every root simple,
      // but the check is cheap.
      Integer mk1;
      mpz_pow_ui(mk1.get_mpz_t(), mm.get_mpz_t(), k - 1);
      if (mod(make_integer(std::uint64_t{k}) * make_integer(u) * mk1, p) == 0)
        continue;
      LemmaOneWitness w{k, u, v, p, hensel_step(k, u, v, p, mm)};
      if (!w.verify())
        throw Error(ErrorCode::Inconsistent,
                    "lemma1_find: lifted witness failed verification at p=" +
                        p.get_str());
      taken.insert(p);
      out.push_back(std::move(w));
      if (out.size() == count) return out;
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "lemma1_find: scan budget of " + std::to_string(budget.scan) +
                  " values exhausted with " + std::to_string(out.size()) + "/" +
                  std::to_string(count) + " witnesses");
}

std::vector<Congruence> CongruenceSystem::congruences() const {
  std::vector<Congruence> out;
  out.push_back({h, d});
  for (const auto& w : witnesses) out.push_back({w.x, w.p * w.p});
  return out;
}

bool CongruenceSystem::verify() const {
  if (gcd(d, h) != 1) return false;
  if (witnesses.size() != (N >= 1 ? 2 * (N - 1) : 0)) return false;
  Integer prod = d;
  std::set<Integer> primes;
  std::size_t idx = 0;
  for (std::uint64_t l = 1; l < 2 * N; ++l) {
    if (l == N) continue;
    const auto& w = witnesses[idx++];
    const std::int64_t expect_v =
        static_cast<std::int64_t>(l) - static_cast<std::int64_t>(N);
    if (w.k != j0 || w.u != i0 || w.v != expect_v) return false;
    if (!w.verify()) return false;
    if (w.p <= make_integer(N)) return false;
    if (!primes.insert(w.p).second) return false;
    if (mpz_divisible_p(d.get_mpz_t(), w.p.get_mpz_t())) return false;
    prod *= w.p * w.p;
  }
  if (prod != alpha) return false;
  if (sgn(x) <= 0 || x > alpha) return false;
  for (const auto& c : congruences()) {
    if (mod(x - c.residue, c.modulus) != 0) return false;
  }
  return gcd(alpha, x) == 1;
}

CongruenceSystem build_system(std::uint64_t i0, unsigned j0, std::uint64_t N,
                              const Integer& d, const Integer& h,
                              const Integer& p_min,
                              const SearchBudget& budget) {
  if (i0 < 1 || j0 < 2)
    throw Error(ErrorCode::InvalidArgument, "build_system: need i0 >= 1, j0 >= 2");
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "build_system: N >= 1");
  if (sgn(d) <= 0 || sgn(h) <= 0 || gcd(d, h) != 1)
    throw Error(ErrorCode::InvalidArgument,
                "build_system: d, h must be positive and coprime");

  CongruenceSystem sys;
  sys.i0 = i0;
  sys.j0 = j0;
  sys.N = N;
  sys.d = d;
  sys.h = h;

  std::set<Integer> used;
  for (const auto& f : factor(d, budget.factor).factors) used.insert(f.prime);
  // The coprimality of alpha and x needs p_l > N >= |l - N|.
  const Integer floor_p = std::max(p_min, make_integer(N));
  for (std::uint64_t l = 1; l < 2 * N; ++l) {
    if (l == N) continue;
    const std::int64_t v =
        static_cast<std::int64_t>(l) - static_cast<std::int64_t>(N);
    auto found = lemma1_find(j0, i0, v, 1, floor_p, &used, budget);
    sys.witnesses.push_back(std::move(found.front()));
  }

  const auto cs = sys.congruences();
  CrtSolution sol = crt_solve(cs);
  sys.alpha = sol.alpha;
  sys.x = sol.x == 0 ? sol.alpha : sol.x;
  if (gcd(sys.alpha, sys.x) != 1)
    throw Error(ErrorCode::Inconsistent,
                "build_system: alpha and x share a factor");
  return sys;
}

QCandidate find_q(const CongruenceSystem& sys, std::uint64_t attempts,
                  bool require_above_alpha, const Integer& start) {
  if (gcd(sys.alpha, sys.x) != 1)
    throw Error(ErrorCode::InvalidArgument, "find_q: gcd(alpha, x) must be 1");
  Integer n0 = start;
  for (std::uint64_t t = 0; t < attempts; ++t, ++n0) {
    Integer q = sys.alpha * n0 + sys.x;
    if (require_above_alpha && q <= sys.alpha) continue;
    const Primality pr = primality(q);
    if (pr.prime) return {std::move(q), n0, pr.probable};
  }
  throw Error(ErrorCode::BudgetExceeded,
              "find_q: no prime among " + std::to_string(attempts) +
                  " candidates");
}

std::vector<ExclusionViolation> verify_exclusions(
    const Integer& q, std::uint64_t i0, unsigned j0, std::uint64_t N,
    const std::vector<IndexPair>& family) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "verify_exclusions: q >= 2");
  Integer center;
  mpz_pow_ui(center.get_mpz_t(), q.get_mpz_t(), j0);
  center *= make_integer(i0);
  const ExponentSet naturals = ExponentSet::naturals();
  std::vector<ExclusionViolation> out;
  for (std::uint64_t u = 1; u < N; ++u) {
    for (int sign : {1, -1}) {
      const Integer n = center + sign * make_integer(u);
      for (const auto& pair : family) {
        if (auto k = is_exponent_image(n, pair.i, pair.j, naturals)) {
          out.push_back({u, sign, pair, *k});
        }
      }
    }
  }
  return out;
}

ForgeCertificate forge(const ForgeRequest& request) {
  ForgeCertificate cert;
  cert.request = request;
  cert.system = build_system(request.i0, request.j0, request.N, request.d,
                             request.h, request.p_min, request.budget);

  const LinearFormSpec form = family_form(request.family);
  std::uint64_t remaining = request.q_attempts;
  Integer start = 0;
  while (true) {
    QCandidate cand = find_q(cert.system, remaining,
                             request.require_above_alpha, start);
    const std::uint64_t spent = to_u64(cand.n0 - start) + 1;
    remaining = spent >= remaining ? 0 : remaining - spent;
    auto violations = verify_exclusions(cand.q, request.i0, request.j0,
                                        request.N, request.family);
    if (violations.empty()) {
      cert.q = std::move(cand);
      mpz_pow_ui(cert.center.get_mpz_t(), cert.q.q.get_mpz_t(), request.j0);
      cert.center *= make_integer(request.i0);
      cert.window_clear = exclusion_window_check(form, cert.center, request.N);
      return cert;
    }
    cert.rejected_q.push_back(cand.q);
    start = cand.n0 + 1;
    if (remaining == 0)
      throw Error(ErrorCode::BudgetExceeded,
                  "forge: every prime q within budget violated the exclusions");
  }
}

bool verify_certificate(const ForgeCertificate& cert) {
  const auto& r = cert.request;
  if (!cert.system.verify()) return false;
  if (cert.system.i0 != r.i0 || cert.system.j0 != r.j0 || cert.system.N != r.N)
    return false;
  if (!is_prime(cert.q.q)) return false;
  if (cert.q.q != cert.system.alpha * cert.q.n0 + cert.system.x) return false;
  if (mod(cert.q.q - r.h, r.d) != 0) return false;
  Integer center;
  mpz_pow_ui(center.get_mpz_t(), cert.q.q.get_mpz_t(), r.j0);
  center *= make_integer(r.i0);
  if (center != cert.center) return false;
  if (!verify_exclusions(cert.q.q, r.i0, r.j0, r.N, r.family).empty())
    return false;
  return exclusion_window_check(family_form(r.family), center, r.N) ==
         cert.window_clear && cert.window_clear;
}

}  // namespace lacunary
