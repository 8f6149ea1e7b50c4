#pragma once

#include <cstddef>
#include <vector>

#include "ksys/flat.hpp"

namespace ksys {

// One curve slid off the base point: a simple arc with both endpoints at x
// that follows the base curve to the loop's first crossing, runs once around
// the loop and returns along the other side.
struct SlideArc {
  std::size_t curve = 0;  // index into the input system
  FlatCurve arc;
  FlatCurve gamma_sub;  // sub-path of the base curve from x to the entry
  std::size_t first_index = 0;      // rank of the entry among all crossings
  Rat first_offset;                 // entry position along the traversal
  std::vector<Rat> strand_offsets;  // positions of all crossings, ascending
};

struct SlideResult {
  std::vector<FlatCurve> system;  // the realization the arcs were built from
  std::size_t gamma_index = 0;
  Vec2 x;
  int orientation = 1;    // +1 walks the base curve forward, -1 backward
  MarkedSurface marked;   // torus punctured at x
  std::vector<SlideArc> arcs;  // ordered by first_offset
};

// Slides every curve meeting system[gamma_index] off the point x: curves
// disjoint from the base curve are skipped. Corridor lanes nest, later
// entries inside earlier ones, so the drawn arcs realize exactly two
// crossings per strand left under a later entry plus the loops' own
// crossings. The system must be embedded and in general position; x must
// lie on the base curve and miss the other curves (in particular it cannot
// sit on a crossing).
SlideResult slide_to_arcs(const std::vector<FlatCurve>& system,
                          std::size_t gamma_index, const Vec2& x,
                          int orientation);

struct SlidePair {
  std::size_t a = 0, b = 0;  // arc indices, a enters first
  long count = 0;            // minimal crossings rel the base puncture
  long certificate = 0;      // 2 * strands under the later entry + loop pairs
};

struct SlideReport {
  int k = 0;
  long bound = 0;  // 3k - 2
  long max_count = 0;
  bool within_bound = false;
  bool certified = false;  // every count at or under its certificate
  std::vector<SlidePair> pairs;
};

// Pairwise minimal crossing numbers of the arcs rel x against the 3k-2
// budget. Certificates are recomputed from the stored system, not from the
// arcs, and must dominate the measured counts.
SlideReport verify_slide_bound(const SlideResult& r, int k);

}  // namespace ksys
