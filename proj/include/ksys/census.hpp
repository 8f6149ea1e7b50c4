#pragma once

#include <string>
#include <vector>

#include "ksys/fuchsian.hpp"
#include "ksys/pair_geometry.hpp"

namespace ksys {

// Tube radius guaranteeing disjoint neighborhoods for geodesics of length
// at most L. Half the min of the distance branch arcsinh(2/sinh^2(L/2)) and
// the angle branch arcsin(1/sinh^2(L/2)); the arcsin argument is clamped to
// 1 so the value stays defined (and <= pi/4) for every L > 0.
double epsilon_of_L(double L);

// Volume of the eps-neighborhood of a closed geodesic in the unit tangent
// bundle: 8 * length * (cosh(eps) - 1). Only valid for eps <= pi/2.
double tube_volume(double length, double eps);

struct GeodesicClass {
  std::string word;  // canonical cyclic representative, inverse-identified
  double length = 0;
  double trace = 0;
  bool primitive = true;
};

struct CensusResult {
  double L = 0;
  std::vector<GeodesicClass> classes;  // sorted by length
  int complete_to_radius = 0;
  bool stable = false;          // counts unchanged from radius R-1 to R
  std::string stability_note;   // always reported, never assumed
  int count() const { return (int)classes.size(); }
};

// Primitive closed geodesics of length <= L, from breadth-first enumeration
// of cyclically reduced words up to word length R. Punctured structures
// (free pi_1) dedup exactly by canonical cyclic word; matrix-list closed
// structures fall back to a numeric axis fingerprint, best effort.
CensusResult enumerate_census(const HyperbolicStructure& st, double L, int radius,
                              int threads = 1);

struct PairRecord {
  int i = 0, j = 0;
  std::string wi, wj;
  PairVerdict verdict = PairVerdict::undetermined;
  double margin = 0;  // distance or angle surplus over the dichotomy level
};

struct GilmanReport {
  double epsilon = 0;
  std::vector<PairRecord> pairs;
  std::vector<PairRecord> undetermined;  // uncertified verdicts land here
  bool pass = false;  // all margins >= -1e-9 and nothing undetermined
};

// Checks every unordered pair of census classes against the short-geodesic
// dichotomy at level L: disjoint at distance >= arcsinh(2/sinh^2(L/2)), or
// crossing at angle >= arcsin(min(1, 1/sinh^2(L/2))).
GilmanReport verify_gilman(const CensusResult& census, const HyperbolicStructure& st);

struct Thm13Report {
  int count = 0;
  double bound = 0;
  bool count_ok = false;
  double volume_sum = 0;
  double volume_budget = 0;  // 4 pi^2 |chi|
  bool volume_ok = false;
  int short_classes = 0;  // length < margulis_mu
  int short_pairs = 0;
  bool short_disjoint_ok = false;
  bool pass = false;
};

// Asserts the census against the count bound (3/2 + (pi^2/mu) e^{2L}) |chi|,
// the tube volume budget, and pairwise disjointness of classes shorter than
// the Margulis constant. Requires stable counts.
Thm13Report check_thm13(const CensusResult& census, const HyperbolicStructure& st);

// Lower Christoffel word for a coprime slope in canonical form (p >= 0);
// negative q mirrors b to B. These classes are exactly the ones with simple
// representatives on the one-holed torus.
std::string christoffel_word(long long p, long long q);

// True when w is a simple class on a one-holed torus, i.e. its canonical
// word is the Christoffel word of its (then primitive) homology class.
// Fills p, q with the canonical slope on success.
bool simple_torus_word(const std::string& w, long long& p, long long& q);

}  // namespace ksys
