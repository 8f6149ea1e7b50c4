#pragma once

#include <string>
#include <vector>

#include "ksys/fuchsian.hpp"

namespace ksys {

// A structure with a marked short cuff alpha and a seed class beta whose
// geodesic meets the cuff orthogonally: the symmetric point of the twist
// family, so member n is the word beta alpha^n.
struct TwistFamily {
  HyperbolicStructure st;
  std::string kind;   // "four-holed" | "one-holed-torus"
  std::string alpha;  // marked cuff
  std::string beta;   // seed at zero twist
  double r = 0;       // cuff length
  int seed_crossings = 0;  // times the seed meets the cuff (2 resp. 1)
  double log_coeff = 0;    // collar term coefficient (4 resp. 2)
};

// Any constructible cuff length. The zero-twist normalization is checked.
TwistFamily make_twist_family(const std::string& kind, double r);

// Pinched regime only: requires 0 < r < 0.1.
TwistFamily build_pinched(const std::string& kind, double r);

// Word of the n-th member, beta followed by n copies of alpha.
std::string family_word(const TwistFamily& tf, int n);

struct FamilyLengths {
  std::vector<double> lengths;  // lengths[n] for n = 0..n_max
  double c0 = 0;  // max over n of lengths[n] - n r - log_coeff log(1/r)
};

// Lengths of the family members, asserting each is a primitive hyperbolic
// class, that lengths increase strictly from n = 2 on, and that the seed
// clears the collar bound log_coeff log(1/r).
FamilyLengths family_lengths(const TwistFamily& tf, int n_max, int threads = 1);

struct GrowthPoint {
  double L = 0;
  double r = 0;   // cuff length used at this L
  int count = 0;  // family members of length at most L
};

struct GrowthFit {
  std::vector<GrowthPoint> points;
  double slope = 0;      // least-squares slope of log count against L
  double intercept = 0;
  double c0 = 0;      // residual constant calibrated at r = 0.05
  double offset = 0;  // r(L) = exp(-L/k + offset), k = 4 resp. 2
  double c1 = 0;      // 3 c0 exp(-c0)
};

// Counts family members below L for cuffs pinched as r(L) = exp(-L/k + offset)
// and fits the exponential growth rate. Needs at least five sample lengths
// spanning at least three units.
GrowthFit growth_fit(const std::string& kind, const std::vector<double>& Ls,
                     int threads = 1);

}  // namespace ksys
