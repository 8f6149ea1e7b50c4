#pragma once

#include <string>
#include <vector>

#include "ksys/fuchsian.hpp"

namespace ksys {

// Complete geodesic in the upper half plane: vertical line at x, or the
// semicircle with center c and radius rho on the real axis.
struct Geo {
  bool vertical = false;
  double x = 0;
  double c = 0;
  double rho = 1;
};

Geo axis_of(const Mat2& m);

// Inversive distance between the boundary circles: < 1 means the geodesics
// cross at angle arccos(I), > 1 disjoint at distance arccosh(I), and values
// at 1 (tangency, shared ideal endpoint) are degenerate.
double inversive(const Geo& g1, const Geo& g2);

enum class PairVerdict { identical, crossing, disjoint, undetermined };

struct CrossingPoint {
  double t = 0;      // position along the first geodesic, mod its length
  double angle = 0;
};

struct PairGeometry {
  PairVerdict verdict = PairVerdict::undetermined;
  double distance = 0;  // disjoint: min over enumerated translates
  double angle = 0;     // crossing: min over crossings on the surface
  int crossings = 0;    // distinct crossing points per period of the first class
  std::vector<CrossingPoint> points;
  bool certified = false;
};

struct PairOptions {
  // Exploration visits group elements whose orbit displacement stays within
  // the computed reach plus this slack.
  double slack = 3.0;
  double margin = 0.5;
  int max_nodes = 500000;
  int max_depth = 200;
  // Exact crossing count when known independently (torus homology); the
  // search certifies and stops once all of them are located.
  int crossing_target = -1;
};

// Decides how the closed geodesics of two classes meet on the surface by
// enumerating group translates of the second axis against the first. Every
// crossing or distance-realizing configuration has a witness of displacement
// at most (len(a) + len(b)) / 2 + d + margin, so exploration closed under
// that radius is complete; hitting a node/depth cap degrades the verdict
// rather than guessing.
PairGeometry pair_geometry(const HyperbolicStructure& st, const std::string& wa,
                           const std::string& wb, const PairOptions& opt = {});

}  // namespace ksys
