#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksys/flat.hpp"
#include "ksys/lattice.hpp"
#include "ksys/util.hpp"

using namespace ksys;

TEST_CASE("straight representatives subdivide at the lattice lines") {
  FlatCurve h = line_curve({1, 0}, Rat(1, 3));
  REQUIRE(h.verts.size() == 2);
  CHECK(h.verts[0] == Vec2{Rat(1, 3), Rat(0)});
  CHECK(h.verts[1] == Vec2{Rat(0), Rat(0)});
  CHECK(homology_class(h) == std::array<std::int64_t, 2>{1, 0});

  FlatCurve v = line_curve({0, 1}, Rat(1, 3));
  REQUIRE(v.verts.size() == 1);
  CHECK(v.verts[0] == Vec2{Rat(1, 3), Rat(0)});
  CHECK(homology_class(v) == std::array<std::int64_t, 2>{0, 1});

  FlatCurve d = line_curve({1, 1}, Rat(1, 3));
  REQUIRE(d.verts.size() == 2);
  CHECK(d.verts[1] == Vec2{Rat(0), Rat(2, 3)});

  FlatCurve c = line_curve({2, 3}, Rat(1, 3));
  REQUIRE(c.verts.size() == 4);
  CHECK(c.verts[1] == Vec2{Rat(0), Rat(0)});
  CHECK(c.verts[2] == Vec2{Rat(2, 3), Rat(0)});
  CHECK(c.verts[3] == Vec2{Rat(0), Rat(1, 2)});
  CHECK(homology_class(c) == std::array<std::int64_t, 2>{2, 3});
  CHECK(self_crossings(c) == 0);

  CHECK_THROWS_AS(line_curve({2, 4}, Rat(0)), invalid_input);
  CHECK_THROWS_AS(line_curve({1, 0}, Rat(1)), invalid_input);
  CHECK_THROWS_AS(line_curve({1, 0}, Rat(-1, 2)), invalid_input);
}

TEST_CASE("lift and normalize round-trip") {
  for (auto cls : {LatticeCurve{1, 0}, {2, 3}, {3, -2}}) {
    FlatCurve c = line_curve(cls, Rat(1, 7));
    FlatCurve back = normalize_lift(lift_curve(c), true);
    CHECK(back.verts == c.verts);
    CHECK(back.jumps == c.jumps);
  }
}

TEST_CASE("crossing counts on straight pairs match the algebraic formula") {
  for (const auto& u : enumerate_curves(3))
    for (const auto& v : enumerate_curves(3)) {
      FlatCurve cu = line_curve(u, Rat(1, 3));
      FlatCurve cv = line_curve(v, Rat(1, 7));
      CHECK(raw_crossings(cu, cv) == intersection_number(u, v));
    }
}

TEST_CASE("parallel copies are disjoint") {
  FlatCurve a = line_curve({1, 0}, Rat(1, 4));
  CHECK(raw_crossings(a, translate_curve(a, {Rat(0), Rat(1, 3)})) == 0);
  FlatCurve b = line_curve({2, 3}, Rat(0));
  CHECK(raw_crossings(b, translate_curve(b, {Rat(1, 5), Rat(1, 11)})) == 0);
}

TEST_CASE("each comb tooth adds two crossings") {
  FlatCurve vert = line_curve({0, 1}, Rat(1, 3));
  FlatCurve horiz = line_curve({1, 0}, Rat(0));
  for (int n = 1; n <= 3; ++n) {
    FlatCurve w = wiggle_curve(vert, n, Rat(1, 5));
    CHECK(w.verts.size() == vert.verts.size() + 2 * size_t(n) + 2);
    CHECK(self_crossings(w) == 0);
    CHECK(homology_class(w) == homology_class(vert));
    CHECK(raw_crossings(horiz, w) == 1 + 2 * n);
    CHECK(raw_crossings(w, horiz) == 1 + 2 * n);
  }
  CHECK_THROWS_AS(wiggle_curve(vert, 0, Rat(1, 5)), invalid_input);
  CHECK_THROWS_AS(wiggle_curve(vert, 1, Rat(0)), invalid_input);
}

TEST_CASE("nudging is deterministic and reaches general position") {
  FlatCurve a1 = line_curve({1, 0}, Rat(0));
  FlatCurve b1 = wiggle_curve(line_curve({0, 1}, Rat(1, 3)), 2, Rat(1, 5));
  FlatCurve a2 = a1, b2 = b1;
  ensure_general_position(a1, b1);
  ensure_general_position(a2, b2);
  CHECK(general_position(a1, b1));
  CHECK(a1.verts == a2.verts);
  CHECK(b1.verts == b2.verts);

  auto xs = enumerate_crossings(a1, b1);
  CHECK(xs.size() == 5);
  for (size_t i = 1; i < xs.size(); ++i) {
    bool ordered = xs[i - 1].ea < xs[i].ea ||
                   (xs[i - 1].ea == xs[i].ea && xs[i - 1].ta < xs[i].ta);
    CHECK(ordered);
  }
}

TEST_CASE("validation rejects malformed curves") {
  FlatCurve empty;
  CHECK_THROWS_AS(validate_curve(empty), invalid_input);

  FlatCurve outside;
  outside.verts = {{Rat(1, 2), Rat(3, 2)}};
  outside.jumps = {{0, 1}};
  CHECK_THROWS_AS(validate_curve(outside), invalid_input);

  FlatCurve degenerate;
  degenerate.verts = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  degenerate.jumps = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(validate_curve(degenerate), invalid_input);

  // crossing enumeration refuses pairs that were not nudged first
  FlatCurve h = line_curve({1, 0}, Rat(0));
  FlatCurve v = line_curve({0, 1}, Rat(0));
  CHECK_THROWS_AS(enumerate_crossings(h, v), invalid_input);

  MarkedSurface t = torus_model();
  CHECK_THROWS_AS(puncture_at(t, {Rat(2), Rat(0)}), invalid_input);
  MarkedSurface tp = puncture_at(t, {Rat(1, 2), Rat(1, 2)});
  CHECK_THROWS_AS(puncture_at(tp, {Rat(1, 2), Rat(1, 2)}), invalid_input);

  FlatCurve arc;
  arc.closed = false;
  arc.verts = {{Rat(1, 2), Rat(1, 2)}, {Rat(1, 4), Rat(1, 4)}};
  arc.jumps = {{0, 0}};
  CHECK_THROWS_AS(validate_arc(arc, tp), invalid_input);
}

TEST_CASE("enclosed punctures of a small null-homologous loop") {
  MarkedSurface t = torus_model();
  MarkedSurface tp = puncture_at(t, {Rat(1, 2), Rat(1, 2)});
  MarkedSurface tpq = puncture_at(tp, {Rat(1, 8), Rat(1, 8)});

  FlatCurve sq;
  sq.verts = {{Rat(1, 4), Rat(1, 4)},
              {Rat(3, 4), Rat(1, 4)},
              {Rat(3, 4), Rat(3, 4)},
              {Rat(1, 4), Rat(3, 4)}};
  sq.jumps = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
  auto enc = enclosed_punctures(sq, tpq);
  REQUIRE(enc.size() == 1);
  CHECK(enc[0] == 0);

  FlatCurve essential = line_curve({1, 0}, Rat(0));
  CHECK_THROWS_AS(enclosed_punctures(essential, tpq), invalid_input);
}
