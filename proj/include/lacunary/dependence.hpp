#pragma once

// Decision procedure for when sum_{n in T} a(n) b^{-i n^j} over a family of
// index pairs can become linearly dependent, explicit dependent examples,
// and bounded search for solutions of i0 x^j0 - i y^j = +-u.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lacunary/pell.hpp"
#include "lacunary/series.hpp"
#include "lacunary/sets.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

/// Finite set of distinct index pairs.
class FamilyIndex {
 public:
  FamilyIndex() = default;
  /// Raises ErrorCode::InvalidArgument on duplicates, i = 0 or j < 2.
  explicit FamilyIndex(std::vector<IndexPair> pairs);

  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  const IndexPair& operator[](std::size_t k) const { return pairs_[k]; }

 private:
  std::vector<IndexPair> pairs_;
};

struct ConditionIViolation {
  std::size_t first = 0;  // indices into the family
  std::size_t second = 0;
  Integer u;  // i1 u^j1 == i2 v^j2, u minimal, then v
  Integer v;
};

/// Decides i1 u^j1 = i2 v^j2 for every unordered pair: solvable iff
/// gcd(j1, j2) divides ord_p(i2) - ord_p(i1) for every prime p, in which
/// case the smallest per-prime exponents give the minimal witness.
std::vector<ConditionIViolation> check_condition_i(const FamilyIndex& family);

/// Witness for a single pair, if one exists.
std::optional<ConditionIViolation> condition_i_witness(const IndexPair& a,
                                                       const IndexPair& b);

/// Pairs with j = 2; more than one is a violation.
std::vector<IndexPair> check_condition_ii(const FamilyIndex& family);

struct FamilyVerdict {
  std::vector<ConditionIViolation> condition_i;
  std::vector<IndexPair> square_pairs;
  bool independent_for_all_sets() const {
    return condition_i.empty() && square_pairs.size() <= 1;
  }
};

FamilyVerdict check_family(const FamilyIndex& family);

enum class CertificateKind { ScaledSets, Pell };

std::string to_string(CertificateKind kind);

/// w0 + w1 sum_{T1} b^{-i1 n^j1} + w2 sum_{T2} b^{-i2 n^j2} = 0.
struct DependencyCertificate {
  CertificateKind kind = CertificateKind::ScaledSets;
  IndexPair first;
  IndexPair second;
  ExponentSet t1 = ExponentSet::naturals();
  ExponentSet t2 = ExponentSet::naturals();
  Integer w0 = 0;
  Integer w1 = 1;
  Integer w2 = -1;
  std::uint64_t base = 2;
  std::size_t precision = 0;
  Rational residual;
  Rational error_bound;
  bool verified = false;

  LinearFormSpec form() const;
};

/// ScaledSets when (i) fails for the pair (T1 = {u 2^(j2 m)},
/// T2 = {v 2^(j1 m)}), otherwise Pell when j1 = j2 = 2 and i1 i2 is not a
/// square (T1 = {x}, T2 = {i1 y} over x^2 - i1 i2 y^2 = 1). Raises
/// ErrorCode::NotApplicable if neither applies.
DependencyCertificate build_counterexample(const IndexPair& first,
                                           const IndexPair& second,
                                           std::uint64_t b,
                                           std::size_t precision);

/// Evaluates the certificate's relation at its precision and records the
/// residual; true iff the residual is within the truncation error.
bool verify_certificate(DependencyCertificate& cert);

struct EquationSolution {
  Integer x;
  Integer y;
  std::uint64_t u = 0;
  int sign = 1;  // i0 x^j0 - i y^j == sign * u

  friend bool operator==(const EquationSolution&, const EquationSolution&) = default;
};

/// Every solution of i0 x^j0 - i y^j = +-u with 1 <= x <= x_max, y >= 1,
/// 1 <= u <= u_max, ordered by x, then u, then sign (- first). The largest x
/// found is only an empirical stand-in for the finiteness bound.
std::vector<EquationSolution> enumerate_equation_solutions(
    std::uint64_t i0, unsigned j0, std::uint64_t i, unsigned j,
    std::uint64_t u_max, std::uint64_t x_max);

}  // namespace lacunary
