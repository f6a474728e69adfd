#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lacunary/types.hpp"

namespace lacunary {

/// A positive solution of x^2 - D y^2 = 1.
struct PellSolution {
  std::uint64_t D = 0;
  Integer x;
  Integer y;

  bool satisfies() const { return x * x - Integer(make_integer(D)) * y * y == 1; }
};

/// Least positive solution, read off the convergents of the continued
/// fraction of sqrt(D). Raises ErrorCode::SquareD for square D (including 0).
PellSolution pell_fundamental(std::uint64_t D);

/// The first `count` positive solutions in increasing x, via
/// (x, y) -> (x x1 + D y y1, x y1 + y x1).
std::vector<PellSolution> pell_stream(std::uint64_t D, std::size_t count);

/// Walks the solution stream in increasing order until `keep_going` returns
/// false for the current solution.
template <typename Fn>
void pell_walk(std::uint64_t D, Fn&& keep_going) {
  const PellSolution fund = pell_fundamental(D);
  const Integer d = make_integer(D);
  Integer x = fund.x, y = fund.y;
  while (keep_going(x, y)) {
    Integer nx = x * fund.x + d * y * fund.y;
    Integer ny = x * fund.y + y * fund.x;
    x.swap(nx);
    y.swap(ny);
  }
}

}  // namespace lacunary
