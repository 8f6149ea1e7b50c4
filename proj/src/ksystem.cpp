#include "ksys/ksystem.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ksys/bounds.hpp"
#include "ksys/util.hpp"

namespace ksys {

IntersectionGraph build_graph(const std::vector<LatticeCurve>& curves, const PairIota& iota) {
  std::set<LatticeCurve> seen(curves.begin(), curves.end());
  if (seen.size() != curves.size()) throw invalid_input("duplicate curve in graph input");

  IntersectionGraph g;
  g.vertices = curves;
  const int n = (int)curves.size();
  g.weights.assign(n, std::vector<std::int64_t>(n, 0));
  g.degree.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t w = iota(curves[i], curves[j]);
      if (w < 0) throw invalid_input("negative intersection weight");
      g.weights[i][j] = g.weights[j][i] = w;
      g.total_intersection += w;
      if (w >= 1) {
        ++g.degree[i];
        ++g.degree[j];
      }
    }
  double dsum = 0;
  for (int d : g.degree) dsum += d;
  g.average_degree = n ? dsum / n : 0.0;
  return g;
}

IntersectionGraph build_graph(const std::vector<LatticeCurve>& curves) {
  return build_graph(curves, [](const LatticeCurve& a, const LatticeCurve& b) {
    return intersection_number(a, b);
  });
}

namespace {

// Tomita-style branch and bound with greedy sequential coloring. With
// target > 0 the search stops as soon as a clique of that size exists.
struct CliqueSearch {
  const std::vector<std::vector<char>>& adj;
  int target = -1;
  std::vector<int> best;
  bool done = false;

  void expand(std::vector<int>& R, const std::vector<int>& P) {
    if (done) return;
    if ((int)R.size() > (int)best.size()) {
      best = R;
      if (target > 0 && (int)best.size() >= target) {
        done = true;
        return;
      }
    }
    if (P.empty()) return;

    std::vector<std::vector<int>> classes;
    for (int v : P) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int w : classes[c])
          if (adj[v][w]) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    std::vector<std::pair<int, int>> ordered;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) ordered.emplace_back((int)c + 1, v);

    for (int i = (int)ordered.size() - 1; i >= 0; --i) {
      auto [ub, v] = ordered[i];
      int need = target > 0 ? target : (int)best.size() + 1;
      if ((int)R.size() + ub < need) return;
      std::vector<int> P2;
      for (int j = 0; j < i; ++j)
        if (adj[ordered[j].second][v]) P2.push_back(ordered[j].second);
      R.push_back(v);
      expand(R, P2);
      R.pop_back();
      if (done) return;
    }
  }
};

int max_clique_size(const std::vector<std::vector<char>>& adj, const std::vector<int>& verts) {
  CliqueSearch s{adj};
  std::vector<int> R;
  s.expand(R, verts);
  return (int)s.best.size();
}

bool has_clique(const std::vector<std::vector<char>>& adj, const std::vector<int>& verts,
                int size) {
  if (size <= 0) return true;
  if ((int)verts.size() < size) return false;
  CliqueSearch s{adj, size};
  std::vector<int> R;
  s.expand(R, verts);
  return (int)s.best.size() >= size;
}

}  // namespace

SearchResult max_ksystem(const std::vector<LatticeCurve>& universe, std::int64_t k) {
  if (k < 0) throw invalid_input("k must be nonnegative");
  std::vector<LatticeCurve> u = universe;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  const int n = (int)u.size();
  if (n == 0) return {};

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = intersection_number(u[i], u[j]) <= k;

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const int size = max_clique_size(adj, all);

  // Lex-least witness: grow the sorted set greedily, keeping a vertex only if
  // a maximum clique through the current prefix still exists.
  SearchResult res;
  res.size = size;
  std::vector<int> pool = all;
  int have = 0;
  while (have < size) {
    for (int idx = 0; idx < (int)pool.size(); ++idx) {
      int v = pool[idx];
      std::vector<int> rest;
      for (int j = idx + 1; j < (int)pool.size(); ++j)
        if (adj[v][pool[j]]) rest.push_back(pool[j]);
      if (has_clique(adj, rest, size - have - 1)) {
        res.witness.push_back(u[v]);
        pool = rest;
        ++have;
        break;
      }
    }
  }
  return res;
}

double turan_bound(double t, double D) { return bound_degree_coloring(t, D); }

ChebyshevRecord chebyshev_pipeline(double N, double t, int k, double C) {
  if (N < 1 || t < 1) throw invalid_input("N and t must be at least 1");
  if (k < 1) throw invalid_input("k must be positive");
  if (C <= 0) throw invalid_input("C must be positive");
  ChebyshevRecord rec;
  rec.L = C * std::sqrt(std::pow(t, 3.0 * k) / N);
  rec.census_bound_2L = bound_geodesic_count(t, 2.0 * rec.L);
  rec.rhs = std::exp(rec.L) * t;
  rec.consistent = N <= rec.rhs;
  return rec;
}

DegreeReport degree_check(const IntersectionGraph& graph, double t, int k, double C) {
  DegreeReport rep;
  rep.bound = bound_one_crossing(t, k, C);
  const int n = (int)graph.vertices.size();
  if (n == 0) return rep;
  double dsum = 0;
  rep.max_degree = -1;
  for (int i = 0; i < n; ++i) {
    dsum += graph.degree[i];
    if (graph.degree[i] > rep.max_degree) {
      rep.max_degree = graph.degree[i];
      rep.argmax = graph.vertices[i];
    }
  }
  rep.mean_degree = dsum / n;
  rep.pass = rep.max_degree <= rep.bound;
  return rep;
}

}  // namespace ksys
