#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksys/surface.hpp"
#include "ksys/util.hpp"

using namespace ksys;

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic({0, 3}) == -1);
  CHECK(euler_characteristic({1, 1}) == -1);
  CHECK(euler_characteristic({2, 0}) == -2);
  CHECK(euler_characteristic({1, 3}) == -3);
  CHECK(SurfaceSig{2, 0}.abs_chi() == 2);
  CHECK(SurfaceSig{0, 4}.complexity() == 1);
  CHECK(SurfaceSig{1, 1}.complexity() == 1);
}

TEST_CASE("admissibility") {
  CHECK(SurfaceSig{1, 1}.hyperbolic_admissible());
  CHECK(SurfaceSig{0, 3}.hyperbolic_admissible());
  CHECK_FALSE(SurfaceSig{0, 0}.hyperbolic_admissible());
  CHECK_FALSE(SurfaceSig{0, 2}.hyperbolic_admissible());
  CHECK_FALSE(SurfaceSig{1, 0}.hyperbolic_admissible());
}

TEST_CASE("pants validation accepts standard decompositions") {
  // One-holed torus: a single pants with two cuffs glued to each other.
  PantsDecomposition t11;
  t11.pants_count = 1;
  t11.gluings = {{{0, 0}, {0, 1}}};
  t11.boundary_cuffs = {{0, 2}};
  auto r = validate_pants({1, 1}, t11);
  CHECK(r.valid);
  CHECK(r.message == "ok");

  // Four-holed sphere: two pants joined along one cuff.
  PantsDecomposition s04;
  s04.pants_count = 2;
  s04.gluings = {{{0, 2}, {1, 2}}};
  s04.boundary_cuffs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(validate_pants({0, 4}, s04).valid);

  // Closed genus 2: two pants, all three cuffs matched across.
  PantsDecomposition g2;
  g2.pants_count = 2;
  g2.gluings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
  CHECK(validate_pants({2, 0}, g2).valid);
}

TEST_CASE("pants validation flags each defect") {
  PantsDecomposition bad;
  bad.pants_count = 2;
  bad.gluings = {{{0, 0}, {0, 1}}};
  bad.boundary_cuffs = {{0, 2}};
  CHECK(validate_pants({1, 1}, bad).message == "pants count");

  PantsDecomposition reuse;
  reuse.pants_count = 1;
  reuse.gluings = {{{0, 0}, {0, 0}}};
  reuse.boundary_cuffs = {{0, 2}};
  CHECK(validate_pants({1, 1}, reuse).message == "cuff slot reused or out of range");

  PantsDecomposition range;
  range.pants_count = 1;
  range.gluings = {{{0, 0}, {1, 1}}};
  range.boundary_cuffs = {{0, 2}};
  CHECK(validate_pants({1, 1}, range).message == "cuff slot reused or out of range");

  // Genus 3 split into two genus-"handles" with no cuff between the halves.
  PantsDecomposition split;
  split.pants_count = 4;
  split.gluings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}},
                   {{2, 0}, {3, 0}}, {{2, 1}, {3, 1}}, {{2, 2}, {3, 2}}};
  CHECK(validate_pants({3, 0}, split).message == "gluing graph disconnected");

  PantsDecomposition shortg;
  shortg.pants_count = 4;
  shortg.gluings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}},
                    {{2, 0}, {3, 0}}, {{2, 1}, {3, 1}}};
  CHECK(validate_pants({3, 0}, shortg).message == "interior cuff count");

  CHECK_THROWS_AS(validate_pants({0, 2}, bad), invalid_input);
}
