#include "ksys/bounds.hpp"

#include <cmath>

#include "ksys/util.hpp"

namespace ksys {

double bound_closed_ksystem(double t, int k, double C) {
  if (t < 2) throw invalid_input("closed k-system bound needs t >= 2");
  if (k < 1) throw invalid_input("k must be positive");
  double lg = std::log(t);
  return C * std::pow(t, 3.0 * k) / (lg * lg);
}

double bound_geodesic_count(double t, double L) {
  if (t <= 0) throw invalid_input("t must be positive");
  if (L <= 0) throw invalid_input("L must be positive");
  const double pi = std::acos(-1.0);
  return (1.5 + (pi * pi / margulis_mu) * std::exp(2.0 * L)) * t;
}

double bound_one_crossing(double t, int k, double C) {
  if (t <= 0) throw invalid_input("t must be positive");
  if (k < 1) throw invalid_input("k must be positive");
  return C * std::pow(t, 3.0 * k - 1.0);
}

double bound_arcs(double t, int k, double C) {
  if (t <= 0) throw invalid_input("t must be positive");
  if (k < 1) throw invalid_input("k must be positive");
  return C * std::pow(t, k + 1.0);
}

double bound_sqrt_pair(double t, double iota) {
  if (t <= 0) throw invalid_input("t must be positive");
  if (iota < 0) throw invalid_input("iota must be nonnegative");
  return 4.0 * std::sqrt(2.0 * t * iota);
}

double bound_degree_coloring(double t, double D) {
  if (t <= 0) throw invalid_input("t must be positive");
  if (D < 0) throw invalid_input("degree must be nonnegative");
  return (3.0 * t / 2.0) * (D + 1.0);
}

double bound_twist_lower(double t, double L, double C) {
  if (t <= 0) throw invalid_input("t must be positive");
  return C * std::exp(L / 4.0) * t;
}

double eval_bound(const std::string& name, const BoundParams& prm) {
  if (name == "thm1.1") return bound_closed_ksystem(prm.t, prm.k, prm.C);
  if (name == "thm1.3") return bound_geodesic_count(prm.t, prm.L);
  if (name == "thm1.4") return bound_one_crossing(prm.t, prm.k, prm.C);
  if (name == "arcs-przytycki") return bound_arcs(prm.t, prm.k, prm.C);
  if (name == "prop3.1") return bound_sqrt_pair(prm.t, prm.iota);
  if (name == "remark3.1") return bound_degree_coloring(prm.t, prm.D);
  if (name == "lower-eL4") return bound_twist_lower(prm.t, prm.L, prm.C);
  throw invalid_input("unknown bound identifier: " + name);
}

RecursionResult recursion_bound(int genus, int punctures, int k, double C) {
  if (genus < 0 || punctures < 0) throw invalid_input("negative signature");
  if (k < 1) throw invalid_input("k must be positive");
  if (genus == 0 && punctures == 0) throw invalid_input("empty signature");
  double step_exp = (k == 2) ? 3.0 : 2.0 * k + 1.0;
  double closed_exp = (k == 2) ? 4.0 : 2.0 * k + 2.0;
  RecursionResult res;
  for (int i = 1; i <= punctures; ++i) {
    double s = (k == 2) ? std::pow(genus + i, step_exp) : C * std::pow(genus + i, step_exp);
    res.steps.push_back(s);
    res.step_sum += s;
  }
  res.closed_term = C * std::pow(genus + punctures, closed_exp);
  res.total = res.step_sum + res.closed_term;
  return res;
}

ThetaResult corollary_theta(int genus, int punctures, int k, double c_low, double base, double C) {
  if (k != 2) throw invalid_input("theta sandwich is stated for k == 2 only");
  if (genus < 0 || punctures < 0) throw invalid_input("negative signature");
  double gn = genus + punctures;
  ThetaResult res;
  res.lower = c_low * std::pow(gn, k + 1.0) / std::pow(k + 1.0, k + 1.0);
  res.upper = base + C * std::pow(gn, 4.0);
  res.consistent = res.lower <= res.upper;
  return res;
}

}  // namespace ksys
