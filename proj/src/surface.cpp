#include "ksys/surface.hpp"

#include <numeric>

#include "ksys/util.hpp"

namespace ksys {

int euler_characteristic(const SurfaceSig& sig) { return sig.euler(); }

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

PantsReport validate_pants(const SurfaceSig& sig, const PantsDecomposition& pd) {
  if (!sig.hyperbolic_admissible())
    throw invalid_input("signature is not hyperbolic-admissible");

  const int g = sig.genus, n = sig.punctures;
  if (pd.pants_count != 2 * g - 2 + n) return {false, "pants count"};
  if ((int)pd.gluings.size() != 3 * g - 3 + n) return {false, "interior cuff count"};
  if ((int)pd.boundary_cuffs.size() != n) return {false, "free cuff count"};

  std::vector<int> used(3 * pd.pants_count, 0);
  auto touch = [&](const CuffRef& c) -> bool {
    if (c.pants < 0 || c.pants >= pd.pants_count || c.slot < 0 || c.slot > 2) return false;
    return ++used[3 * c.pants + c.slot] == 1;
  };
  for (const auto& [u, v] : pd.gluings)
    if (!touch(u) || !touch(v)) return {false, "cuff slot reused or out of range"};
  for (const auto& c : pd.boundary_cuffs)
    if (!touch(c)) return {false, "cuff slot reused or out of range"};

  std::vector<int> parent(pd.pants_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : pd.gluings) {
    int a = find_root(parent, u.pants), b = find_root(parent, v.pants);
    parent[a] = b;
  }
  for (int i = 1; i < pd.pants_count; ++i)
    if (find_root(parent, i) != find_root(parent, 0)) return {false, "gluing graph disconnected"};

  return {true, "ok"};
}

}  // namespace ksys
