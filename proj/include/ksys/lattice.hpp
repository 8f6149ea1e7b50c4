#pragma once

#include <cstdint>
#include <vector>

namespace ksys {

// Unoriented essential simple closed curve on the square torus, named by its
// primitive homology class. Canonical form: gcd(|p|,|q|) == 1 with p > 0, or
// p == 0 and q == 1.
struct LatticeCurve {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const LatticeCurve&, const LatticeCurve&) = default;
};

LatticeCurve canonicalize(std::int64_t p, std::int64_t q);

std::int64_t intersection_number(const LatticeCurve& a, const LatticeCurve& b);

// All canonical classes with |p| <= box and |q| <= box, sorted.
std::vector<LatticeCurve> enumerate_curves(std::int64_t box);

}  // namespace ksys
