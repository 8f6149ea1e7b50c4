#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ksys/lattice.hpp"

namespace ksys {

// Weighted intersection data for a finite curve list. The degree fields refer
// to the graph with an edge wherever iota >= 1.
struct IntersectionGraph {
  std::vector<LatticeCurve> vertices;
  std::vector<std::vector<std::int64_t>> weights;
  std::vector<int> degree;
  double average_degree = 0;
  std::int64_t total_intersection = 0;
};

using PairIota = std::function<std::int64_t(const LatticeCurve&, const LatticeCurve&)>;

IntersectionGraph build_graph(const std::vector<LatticeCurve>& curves, const PairIota& iota);
IntersectionGraph build_graph(const std::vector<LatticeCurve>& curves);

// Exact maximum subset with all pairwise iota <= k, over the given finite
// universe only. Witness is the lexicographically least maximum, sorted.
struct SearchResult {
  int size = 0;
  std::vector<LatticeCurve> witness;
};
SearchResult max_ksystem(const std::vector<LatticeCurve>& universe, std::int64_t k);

double turan_bound(double t, double D);

// L = C sqrt(t^{3k}/N); consistency test N <= e^L t, with the length-2L
// census bound recorded alongside.
struct ChebyshevRecord {
  double L = 0;
  double census_bound_2L = 0;
  double rhs = 0;
  bool consistent = false;
};
ChebyshevRecord chebyshev_pipeline(double N, double t, int k, double C);

// Max degree against C t^{3k-1}. The fail flag is a calibration aid for the
// configured C, not a structural error.
struct DegreeReport {
  int max_degree = 0;
  double mean_degree = 0;
  LatticeCurve argmax{0, 1};
  double bound = 0;
  bool pass = true;
};
DegreeReport degree_check(const IntersectionGraph& graph, double t, int k, double C);

}  // namespace ksys
