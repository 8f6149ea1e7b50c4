#include "ksys/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "ksys/util.hpp"

namespace ksys {

LatticeCurve canonicalize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw invalid_input("zero vector names no curve");
  std::int64_t g = std::gcd(std::abs(p), std::abs(q));
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::int64_t intersection_number(const LatticeCurve& a, const LatticeCurve& b) {
  return std::abs(a.p * b.q - a.q * b.p);
}

std::vector<LatticeCurve> enumerate_curves(std::int64_t box) {
  if (box < 1) throw invalid_input("box must be at least 1");
  std::vector<LatticeCurve> out;
  for (std::int64_t p = 0; p <= box; ++p)
    for (std::int64_t q = -box; q <= box; ++q) {
      if (p == 0 && q == 0) continue;
      LatticeCurve c = canonicalize(p, q);
      if (c.p == p && c.q == q) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ksys
