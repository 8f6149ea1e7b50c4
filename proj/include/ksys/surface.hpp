#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ksys {

struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  int euler() const { return 2 - 2 * genus - punctures; }
  bool hyperbolic_admissible() const { return euler() < 0; }
  int complexity() const { return 3 * genus - 3 + punctures; }
  int abs_chi() const { return -euler(); }

  auto operator<=>(const SurfaceSig&) const = default;
};

int euler_characteristic(const SurfaceSig& sig);

// (pants index, slot in 0..2). Each slot is glued at most once or left free.
struct CuffRef {
  int pants = 0;
  int slot = 0;
  auto operator<=>(const CuffRef&) const = default;
};

struct PantsDecomposition {
  int pants_count = 0;
  std::vector<std::pair<CuffRef, CuffRef>> gluings;
  std::vector<CuffRef> boundary_cuffs;
};

struct PantsReport {
  bool valid = false;
  std::string message;  // first violated count, or "ok"
};

PantsReport validate_pants(const SurfaceSig& sig, const PantsDecomposition& pd);

}  // namespace ksys
