#pragma once

// Symbolic exponent sets. Infinite sets are never materialized; they are
// tested for membership or enumerated up to an explicit bound.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lacunary/types.hpp"

namespace lacunary {

namespace set_kind {

struct Naturals {};
struct Primes {};
/// Primes p with p = h (mod d), gcd(d, h) = 1.
struct PrimesInAP {
  std::uint64_t d = 1;
  std::uint64_t h = 1;
};
/// All positive n with n = h (mod d); {2, 4, 6, ...} is Progression{2, 0}.
struct Progression {
  std::uint64_t d = 1;
  std::uint64_t h = 0;
};
struct Squarefree {};
struct Explicit {
  std::vector<Integer> values;  // strictly increasing, positive
};
/// {u * 2^(j m) : m >= 0}.
struct Geometric {
  std::uint64_t u = 1;
  unsigned j = 2;
};
/// x-coordinates of the positive solutions of x^2 - D y^2 = 1.
struct PellX {
  std::uint64_t D = 2;
};
/// scale * y over the same solutions.
struct PellY {
  std::uint64_t D = 2;
  std::uint64_t scale = 1;
};

}  // namespace set_kind

class ExponentSet {
 public:
  using Kind = std::variant<set_kind::Naturals, set_kind::Primes,
                            set_kind::PrimesInAP, set_kind::Progression,
                            set_kind::Squarefree, set_kind::Explicit,
                            set_kind::Geometric, set_kind::PellX,
                            set_kind::PellY>;

  /// Validates the kind's invariants; raises ErrorCode::InvalidArgument.
  explicit ExponentSet(Kind kind, std::optional<Integer> min = std::nullopt);

  static ExponentSet naturals() { return ExponentSet(set_kind::Naturals{}); }
  static ExponentSet primes() { return ExponentSet(set_kind::Primes{}); }
  static ExponentSet primes_in_ap(std::uint64_t d, std::uint64_t h) {
    return ExponentSet(set_kind::PrimesInAP{d, h});
  }
  static ExponentSet progression(std::uint64_t d, std::uint64_t h) {
    return ExponentSet(set_kind::Progression{d, h});
  }
  static ExponentSet squarefree() { return ExponentSet(set_kind::Squarefree{}); }
  static ExponentSet explicit_values(std::vector<Integer> values) {
    return ExponentSet(set_kind::Explicit{std::move(values)});
  }
  static ExponentSet geometric(std::uint64_t u, unsigned j) {
    return ExponentSet(set_kind::Geometric{u, j});
  }
  static ExponentSet pell_x(std::uint64_t D) {
    return ExponentSet(set_kind::PellX{D});
  }
  static ExponentSet pell_y(std::uint64_t D, std::uint64_t scale) {
    return ExponentSet(set_kind::PellY{D, scale});
  }

  const Kind& kind() const { return kind_; }
  const std::optional<Integer>& min() const { return min_; }

  /// Short kind tag, e.g. "primes_in_ap"; matches the JSON "kind" field.
  std::string name() const;

  bool finite() const {
    return std::holds_alternative<set_kind::Explicit>(kind_);
  }

  bool contains(const Integer& n) const;

  /// Every member <= limit, strictly increasing.
  std::vector<Integer> enumerate(const Integer& limit) const;

 private:
  Kind kind_;
  std::optional<Integer> min_;
};

inline bool set_contains(const ExponentSet& s, const Integer& n) {
  return s.contains(n);
}

inline std::vector<Integer> set_enumerate(const ExponentSet& s,
                                          const Integer& limit) {
  return s.enumerate(limit);
}

}  // namespace lacunary
