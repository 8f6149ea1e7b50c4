#pragma once

#include <cstdint>
#include <vector>

#include "ksys/flat.hpp"

namespace ksys {

// Exact counterclockwise order of nonzero directions, starting just above
// the positive x axis. Equal directions are not ordered; callers must not
// feed parallel germs of the same sign.
bool angle_less(const Vec2& u, const Vec2& v);

struct ArrNode {
  bool is_puncture = false;
  Vec2 pos_a, pos_b;  // crossing point in each curve's lift frame
  std::size_t edge_a = 0, edge_b = 0;
  Rat ta, tb;
  Vec2 point;  // torus position in [0,1)^2 (puncture nodes key on this)
};

struct ArrHalfEdge {
  int from = -1, to = -1;
  int curve = 0;        // 0 = first curve, 1 = second
  bool forward = true;  // orientation relative to the carrying curve
  Vec2 dir_from, dir_to;
  // Relative polyline: chain.front() = 0, chain.back() = displacement.
  std::vector<Vec2> chain;
  int twin = -1;
};

struct ArrFace {
  std::vector<int> hedges;
  bool closed_lift = false;
  Rat area2;  // twice the signed area of the lifted boundary walk
  // Two corners, one side per curve, both corners transverse crossings,
  // closed lift, positive area: the face is an embedded disk whose interior
  // misses both curves.
  bool bigon = false;
};

// Arrangement of two embedded curves in general position: crossings and arc
// endpoints as nodes, the sub-arcs between them as edges, faces traced with
// the region on the left of each half-edge.
struct Arrangement {
  std::vector<ArrNode> nodes;
  std::vector<ArrHalfEdge> half;
  std::vector<std::vector<int>> out;  // outgoing half-edges per node, ccw
  std::vector<ArrFace> faces;
  long crossings = 0;
};

Arrangement build_arrangement(const FlatCurve& a, const FlatCurve& b);

// Lifted boundary polygon of a face, anchored at the walk's first node.
std::vector<Vec2> face_polygon(const Arrangement& arr, const ArrFace& f);

// True when no puncture translate lies inside (or on) the face polygon.
bool face_puncture_free(const Arrangement& arr, const ArrFace& f,
                        const MarkedSurface& m);

// Offset of a polyline to one side (+1 = left of travel): per-edge normals
// scaled by eps, miter joints when the corner turns into the offset side,
// plain chords when it turns away. Endpoints are offset with their edges.
std::vector<Vec2> offset_path(const std::vector<Vec2>& pts, int side,
                              const Rat& eps);

// Exact winding number of a closed polygon around a point off the boundary.
int winding_number(const std::vector<Vec2>& poly, const Vec2& p);

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

}  // namespace ksys
