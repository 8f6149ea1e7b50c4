#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ksys/lattice.hpp"
#include "ksys/rational.hpp"
#include "ksys/surface.hpp"

namespace ksys {

// Polygonal representative on the square torus. Vertices live in [0,1)^2 and
// edge i runs from verts[i] to verts[i+1] + jumps[i] in the plane, so jumps
// record the lattice translations. Closed curves wrap (one edge per vertex);
// arcs have one edge less and keep their endpoints at marked punctures.
struct FlatCurve {
  bool closed = true;
  std::vector<Vec2> verts;
  std::vector<std::array<std::int64_t, 2>> jumps;
};

// Flat torus with marked points.
struct MarkedSurface {
  SurfaceSig sig{1, 0};
  std::vector<Vec2> punctures;
};

MarkedSurface torus_model();
MarkedSurface puncture_at(const MarkedSurface& m, const Vec2& x);

void validate_curve(const FlatCurve& c);
// Arc endpoints must sit exactly on punctures of m.
void validate_arc(const FlatCurve& c, const MarkedSurface& m);

std::array<std::int64_t, 2> homology_class(const FlatCurve& c);

// Lifted vertex chain. Closed curves get the closing point appended, so the
// result always holds one point per edge plus one.
std::vector<Vec2> lift_curve(const FlatCurve& c);
// Inverse: pts is a full chain as produced by lift_curve (for closed curves
// the last point must equal the first plus an integer vector).
FlatCurve normalize_lift(const std::vector<Vec2>& pts, bool closed);

// Straight representative of the class through (offset, 0), subdivided at the
// lattice lines; vertical through (offset, 0) when p = 0.
FlatCurve line_curve(const LatticeCurve& c, const Rat& offset);

FlatCurve translate_curve(const FlatCurve& c, const Vec2& t);

// Homotopic representative with an n-fold comb switchback on edge 0 reaching
// amp behind the edge start; each tooth adds two crossings with anything the
// overshoot passes. The result is checked to be embedded.
FlatCurve wiggle_curve(const FlatCurve& c, int n, const Rat& amp);

// No tangencies, no triple points, no vertex of one curve on the other, and
// (when marked) no puncture on a curve except at arc endpoints.
bool general_position(const FlatCurve& a, const FlatCurve& b,
                      const MarkedSurface* marked = nullptr);
bool self_general_position(const FlatCurve& a,
                           const MarkedSurface* marked = nullptr);

// Deterministic rational nudges (scales 1/2^6 .. 1/2^40, hashed vertex
// directions) until the pair is in general position. Arc endpoints stay
// pinned. Fails if the cascade is exhausted.
void ensure_general_position(FlatCurve& a, FlatCurve& b,
                             const MarkedSurface* marked = nullptr);

// System versions: every curve clean against itself, every pair transverse,
// and no crossing position shared between pairs (no triple points).
bool system_general_position(const std::vector<FlatCurve>& sys,
                             const MarkedSurface* marked = nullptr);
void ensure_general_position(std::vector<FlatCurve>& sys,
                             const MarkedSurface* marked = nullptr);

struct CrossingData {
  std::size_t ea = 0, eb = 0;  // edge indices
  Rat ta, tb;                  // params strictly inside the edges
  Vec2 pos_a, pos_b;           // crossing point in each curve's lift frame
};

// All transverse crossings of a pair already in general position, sorted by
// (ea, ta, eb, tb).
std::vector<CrossingData> enumerate_crossings(const FlatCurve& a,
                                              const FlatCurve& b);

// Transverse crossing counts on the torus; copies are nudged into general
// position first, which is where the documented perturbation convention
// lives.
long raw_crossings(const FlatCurve& a, const FlatCurve& b);
long self_crossings(const FlatCurve& a);

// Punctures enclosed by a null-homologous embedded closed curve (indices
// into m.punctures); the disk side is the bounded side of the closed lift.
std::vector<std::size_t> enclosed_punctures(const FlatCurve& c,
                                            const MarkedSurface& m);

struct BigonOptions {
  std::uint64_t choice_seed = 0;  // 0 = canonical bigon order, else shuffled
};

struct BigonResult {
  FlatCurve a, b;
  long count = 0;
  int removed = 0;
};

// Removes innermost puncture-free bigons until none remain; the final count
// is the geometric intersection number rel punctures. Inputs must be
// embedded (arcs taken rel the marking); working copies are nudged into
// general position first. The crossing count never increases and drops by
// exactly two per removed bigon.
BigonResult bigon_reduce(const FlatCurve& a, const FlatCurve& b,
                         const MarkedSurface& marked,
                         const BigonOptions& opt = {});

}  // namespace ksys
