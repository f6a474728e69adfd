#pragma once

// Integer relation detection over fixed-point constants by lattice
// reduction. A miss is reported as an exclusion bound, never as a proof of
// independence.

#include <cstddef>
#include <optional>
#include <vector>

#include "lacunary/series.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

/// Lovasz parameter used by lll_reduce unless told otherwise.
inline const Rational kLovasz{99, 100};

/// In-place exact integral LLL (all arithmetic in integers). Rows must be
/// linearly independent. Returns the squared Gram-Schmidt norms of the
/// reduced basis.
std::vector<Rational> lll_reduce(std::vector<std::vector<Integer>>& basis,
                                 const Rational& delta = kLovasz);

struct RelationQuery {
  std::vector<FixedPointValue> values;  // conventionally values[0] == 1
  Integer coeff_bound = 1000;
  std::size_t precision = 50;  // base-b digits relative to the largest value
};

struct IntegerRelation {
  std::vector<Integer> coefficients;
  Rational residual;   // |sum c_i v_i| of the represented values
  Rational tolerance;  // sum |c_i| err_i + b^(e - precision/2)
};

struct RelationSearch {
  std::optional<IntegerRelation> relation;
  // Always reported, so a miss says which search came up empty.
  Integer coeff_bound;
  std::size_t precision = 0;
  Rational residual_floor;  // smallest residual among the reduced candidates
  // Every nonzero lattice vector is at least this long (min Gram-Schmidt
  // norm, squared). A relation with max |c_i| <= coeff_bound would give a
  // vector of squared length at most `relation_norm_sq`.
  Rational lattice_floor_sq;
  Rational relation_norm_sq;
  bool bound_certified() const { return lattice_floor_sq > relation_norm_sq; }
};

/// Reduces the lattice spanned by (e_k | round(b^(precision - e) v_k)),
/// where b^e is the magnitude of the largest value, and returns the
/// shortest reduced row that verifies. Raises ErrorCode::PrecisionTooLow
/// when an input's error bound exceeds b^(e - precision/2).
RelationSearch find_relation(const RelationQuery& query);

struct RelationCheck {
  Rational residual;
  Rational tolerance;  // sum |c_i| err_i
  bool pass = false;
};

/// Exact residual of the combination against the combined error bounds.
/// Raises ErrorCode::InvalidArgument on length mismatch or all-zero
/// coefficients.
RelationCheck verify_relation(const std::vector<FixedPointValue>& values,
                              const std::vector<Integer>& coefficients);

}  // namespace lacunary
