#pragma once

#include <string>
#include <vector>

#include "ksys/surface.hpp"

namespace ksys {

// Margulis-type constant used by the short-geodesic count. Exact value as
// published; do not "improve" it.
inline constexpr double margulis_mu = 0.2629;

// Closed-surface k-system count: C * t^{3k} / (log t)^2, t = |chi|, t >= 2.
double bound_closed_ksystem(double t, int k, double C);

// Length-L geodesic count: (3/2 + (pi^2/mu) e^{2L}) * t.
double bound_geodesic_count(double t, double L);

// One-crossing-per-pair systems: C * t^{3k-1}.
double bound_one_crossing(double t, int k, double C);

// Arc systems on punctured surfaces: C * t^{k+1}.
double bound_arcs(double t, int k, double C);

// Square-root pair bound: 4 * sqrt(2 t iota).
double bound_sqrt_pair(double t, double iota);

// Clique-to-coloring bound: (3t/2) * (D + 1).
double bound_degree_coloring(double t, double D);

// Twist-family lower bound: C * e^{L/4} * t.
double bound_twist_lower(double t, double L, double C);

// Dispatch by statement identifier:
//   thm1.1 thm1.3 thm1.4 arcs-przytycki prop3.1 remark3.1 lower-eL4
// Parameter slots (unused ones ignored): t, k, C, L, iota, D.
struct BoundParams {
  double t = 0;
  int k = 0;
  double C = 1;
  double L = 0;
  double iota = 0;
  double D = 0;
};
double eval_bound(const std::string& name, const BoundParams& prm);

// Cut-and-count recursion. Generic exponents 2k+1 / 2k+2; the k == 2 variant
// uses the cubic step form: steps (g+i)^3 for i in 1..n, closed term
// C * (g+n)^4.
struct RecursionResult {
  std::vector<double> steps;
  double step_sum = 0;
  double closed_term = 0;
  double total = 0;
};
RecursionResult recursion_bound(int genus, int punctures, int k, double C);

// k == 2 sandwich: lower c_low (g+n)^{k+1} / (k+1)^{k+1}, upper
// base + C (g+n)^4. Errors for k != 2.
struct ThetaResult {
  double lower = 0;
  double upper = 0;
  bool consistent = false;
};
ThetaResult corollary_theta(int genus, int punctures, int k, double c_low, double base, double C);

}  // namespace ksys
