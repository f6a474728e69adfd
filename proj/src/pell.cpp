#include "lacunary/pell.hpp"

#include "lacunary/arith.hpp"
#include "lacunary/error.hpp"

namespace lacunary {

PellSolution pell_fundamental(std::uint64_t D) {
  const Integer d = make_integer(D);
  const RootResult r = int_nth_root(d, 2);
  if (r.exact) {
    throw Error(ErrorCode::SquareD,
                "pell_fundamental: D=" + std::to_string(D) + " is a square");
  }
  // sqrt(D) = [a0; a1, a2, ...] with m_{k+1} = d_k a_k - m_k,
  // d_{k+1} = (D - m_{k+1}^2) / d_k, a_{k+1} = floor((a0 + m_{k+1}) / d_{k+1}).
  const Integer a0 = r.root;
  Integer m = 0, den = 1, a = a0;
  Integer h_prev = 1, h = a0;  // convergent numerators
  Integer k_prev = 0, k = 1;   // convergent denominators
  while (h * h - d * k * k != 1) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return {D, h, k};
}

std::vector<PellSolution> pell_stream(std::uint64_t D, std::size_t count) {
  std::vector<PellSolution> out;
  if (count == 0) {
    pell_fundamental(D);  // still reject square D
    return out;
  }
  pell_walk(D, [&](const Integer& x, const Integer& y) {
    out.push_back({D, x, y});
    return out.size() < count;
  });
  return out;
}

}  // namespace lacunary
