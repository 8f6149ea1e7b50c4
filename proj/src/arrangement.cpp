#include "ksys/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ksys/util.hpp"

namespace ksys {

namespace {

Rat frac_part(const Rat& r) { return r - Rat(rat_floor(r)); }

std::int64_t to_i64_floor(const Rat& r) {
  return rat_floor(r).convert_to<std::int64_t>();
}

struct OnCurve {
  std::size_t e = 0;
  Rat t;
  Vec2 pos;
};

OnCurve on_curve(const ArrNode& n, int curve) {
  if (curve == 0) return {n.edge_a, n.ta, n.pos_a};
  return {n.edge_b, n.tb, n.pos_b};
}

int add_edge(Arrangement& arr, int nf, int nt, int curve,
             const std::vector<Vec2>& abs) {
  if (abs.size() < 2) throw structure_defect("arrangement edge without a segment");
  ArrHalfEdge h;
  h.from = nf;
  h.to = nt;
  h.curve = curve;
  h.forward = true;
  h.chain.reserve(abs.size());
  for (const Vec2& p : abs) h.chain.push_back(p - abs.front());
  h.dir_from = h.chain[1] - h.chain[0];
  h.dir_to = h.chain[h.chain.size() - 1] - h.chain[h.chain.size() - 2];
  ArrHalfEdge g;
  g.from = nt;
  g.to = nf;
  g.curve = curve;
  g.forward = false;
  g.chain.reserve(abs.size());
  for (std::size_t i = abs.size(); i-- > 0;)
    g.chain.push_back(abs[i] - abs.back());
  g.dir_from = g.chain[1] - g.chain[0];
  g.dir_to = g.chain[g.chain.size() - 1] - g.chain[g.chain.size() - 2];
  const int hid = int(arr.half.size());
  h.twin = hid + 1;
  g.twin = hid;
  arr.half.push_back(std::move(h));
  arr.half.push_back(std::move(g));
  return hid;
}

// Face on the left of each half-edge: continue with the rotation predecessor
// of the twin at the target node.
int next_hedge(const Arrangement& arr, int h) {
  const int v = arr.half[h].to;
  const int tw = arr.half[h].twin;
  const auto& rot = arr.out[v];
  const auto it = std::find(rot.begin(), rot.end(), tw);
  if (it == rot.end()) throw structure_defect("twin missing from rotation");
  const std::size_t idx = std::size_t(it - rot.begin());
  return rot[(idx + rot.size() - 1) % rot.size()];
}

}  // namespace

bool angle_less(const Vec2& u, const Vec2& v) {
  auto upper = [](const Vec2& w) { return w.y > 0 || (w.y == 0 && w.x > 0); };
  const bool au = upper(u), av = upper(v);
  if (au != av) return au;
  return u.cross(v) > 0;
}

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  if (d.cross(p - a) != 0) return false;
  const Rat t = d.dot(p - a);
  return t >= 0 && t <= d.dot(d);
}

int winding_number(const std::vector<Vec2>& poly, const Vec2& p) {
  int w = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& u = poly[i];
    const Vec2& v = poly[(i + 1) % poly.size()];
    if (u.y <= p.y) {
      if (v.y > p.y && (v - u).cross(p - u) > 0) ++w;
    } else {
      if (v.y <= p.y && (v - u).cross(p - u) < 0) --w;
    }
  }
  return w;
}

Arrangement build_arrangement(const FlatCurve& a, const FlatCurve& b) {
  if (self_crossings(a) != 0 || self_crossings(b) != 0)
    throw invalid_input("arrangement needs embedded curves");
  const auto cds = enumerate_crossings(a, b);
  Arrangement arr;
  arr.crossings = long(cds.size());
  for (const CrossingData& cd : cds) {
    ArrNode n;
    n.edge_a = cd.ea;
    n.edge_b = cd.eb;
    n.ta = cd.ta;
    n.tb = cd.tb;
    n.pos_a = cd.pos_a;
    n.pos_b = cd.pos_b;
    n.point = {frac_part(cd.pos_a.x), frac_part(cd.pos_a.y)};
    arr.nodes.push_back(std::move(n));
  }
  std::map<Vec2, int, bool (*)(const Vec2&, const Vec2&)> punct(vec2_less);
  auto punct_node = [&arr, &punct](const Vec2& v) {
    const auto it = punct.find(v);
    if (it != punct.end()) return it->second;
    ArrNode n;
    n.is_puncture = true;
    n.point = v;
    n.pos_a = v;
    n.pos_b = v;
    const int id = int(arr.nodes.size());
    arr.nodes.push_back(std::move(n));
    punct.emplace(v, id);
    return id;
  };

  const FlatCurve* cs[2] = {&a, &b};
  for (int ci = 0; ci < 2; ++ci) {
    const FlatCurve& c = *cs[ci];
    const auto pts = lift_curve(c);
    const std::size_t m = pts.size() - 1;
    const Vec2 T = c.closed ? pts.back() - pts.front() : Vec2{Rat(0), Rat(0)};
    std::vector<int> order(cds.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&arr, ci](int x, int y) {
      const OnCurve u = on_curve(arr.nodes[x], ci);
      const OnCurve v = on_curve(arr.nodes[y], ci);
      if (u.e != v.e) return u.e < v.e;
      return u.t < v.t;
    });
    if (order.empty()) {
      if (!c.closed) {
        const int nf = punct_node(c.verts.front());
        const int nt = punct_node(c.verts.back());
        add_edge(arr, nf, nt, ci, pts);
      }
      continue;
    }
    if (!c.closed) {
      const OnCurve o = on_curve(arr.nodes[order.front()], ci);
      std::vector<Vec2> abs(pts.begin(), pts.begin() + long(o.e) + 1);
      abs.push_back(o.pos);
      add_edge(arr, punct_node(c.verts.front()), order.front(), ci, abs);
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      const OnCurve u = on_curve(arr.nodes[order[i]], ci);
      const OnCurve v = on_curve(arr.nodes[order[i + 1]], ci);
      std::vector<Vec2> abs{u.pos};
      for (std::size_t e = u.e + 1; e <= v.e; ++e) abs.push_back(pts[e]);
      abs.push_back(v.pos);
      add_edge(arr, order[i], order[i + 1], ci, abs);
    }
    const OnCurve u = on_curve(arr.nodes[order.back()], ci);
    if (c.closed) {
      const OnCurve v = on_curve(arr.nodes[order.front()], ci);
      std::vector<Vec2> abs{u.pos};
      for (std::size_t e = u.e + 1; e <= m; ++e) abs.push_back(pts[e]);
      for (std::size_t e = 1; e <= v.e; ++e) abs.push_back(pts[e] + T);
      abs.push_back(v.pos + T);
      add_edge(arr, order.back(), order.front(), ci, abs);
    } else {
      std::vector<Vec2> abs{u.pos};
      for (std::size_t e = u.e + 1; e <= m; ++e) abs.push_back(pts[e]);
      add_edge(arr, order.back(), punct_node(c.verts.back()), ci, abs);
    }
  }

  arr.out.resize(arr.nodes.size());
  for (int h = 0; h < int(arr.half.size()); ++h)
    arr.out[arr.half[h].from].push_back(h);
  for (auto& rot : arr.out) {
    std::sort(rot.begin(), rot.end(), [&arr](int x, int y) {
      return angle_less(arr.half[x].dir_from, arr.half[y].dir_from);
    });
    for (std::size_t i = 0; i + 1 < rot.size(); ++i)
      if (!angle_less(arr.half[rot[i]].dir_from, arr.half[rot[i + 1]].dir_from))
        throw structure_defect("parallel germs at an arrangement node");
  }

  std::vector<char> seen(arr.half.size(), 0);
  for (int h0 = 0; h0 < int(arr.half.size()); ++h0) {
    if (seen[h0]) continue;
    ArrFace f;
    Vec2 disp{Rat(0), Rat(0)};
    Rat area(0);
    int cur = h0;
    do {
      seen[cur] = 1;
      f.hedges.push_back(cur);
      const ArrHalfEdge& he = arr.half[cur];
      for (std::size_t i = 0; i + 1 < he.chain.size(); ++i)
        area += (disp + he.chain[i]).cross(disp + he.chain[i + 1]);
      disp = disp + he.chain.back();
      cur = next_hedge(arr, cur);
    } while (cur != h0);
    f.closed_lift = disp == Vec2{Rat(0), Rat(0)};
    f.area2 = area;
    if (f.hedges.size() == 2) {
      const ArrHalfEdge& ha = arr.half[f.hedges[0]];
      const ArrHalfEdge& hb = arr.half[f.hedges[1]];
      f.bigon = ha.curve != hb.curve && f.closed_lift && area > 0 &&
                !arr.nodes[ha.from].is_puncture &&
                !arr.nodes[ha.to].is_puncture;
    }
    arr.faces.push_back(std::move(f));
  }
  return arr;
}

std::vector<Vec2> face_polygon(const Arrangement& arr, const ArrFace& f) {
  const ArrHalfEdge& h0 = arr.half[f.hedges[0]];
  const ArrNode& n0 = arr.nodes[h0.from];
  Vec2 off = n0.is_puncture ? n0.point : (h0.curve == 0 ? n0.pos_a : n0.pos_b);
  std::vector<Vec2> poly;
  for (const int hid : f.hedges) {
    const ArrHalfEdge& he = arr.half[hid];
    for (std::size_t i = 0; i + 1 < he.chain.size(); ++i)
      poly.push_back(off + he.chain[i]);
    off = off + he.chain.back();
  }
  return poly;
}

bool face_puncture_free(const Arrangement& arr, const ArrFace& f,
                        const MarkedSurface& m) {
  const auto poly = face_polygon(arr, f);
  Rat x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
  for (const Vec2& p : poly) {
    if (p.x < x0) x0 = p.x;
    if (p.x > x1) x1 = p.x;
    if (p.y < y0) y0 = p.y;
    if (p.y > y1) y1 = p.y;
  }
  for (const Vec2& p : m.punctures) {
    const std::int64_t tx0 = to_i64_floor(x0 - p.x), tx1 = to_i64_floor(x1 - p.x) + 1;
    const std::int64_t ty0 = to_i64_floor(y0 - p.y), ty1 = to_i64_floor(y1 - p.y) + 1;
    for (std::int64_t tx = tx0; tx <= tx1; ++tx) {
      for (std::int64_t ty = ty0; ty <= ty1; ++ty) {
        const Vec2 q = p + Vec2{Rat(tx), Rat(ty)};
        bool boundary = false;
        for (std::size_t e = 0; e < poly.size() && !boundary; ++e)
          boundary = point_on_segment(q, poly[e], poly[(e + 1) % poly.size()]);
        if (boundary || winding_number(poly, q) != 0) return false;
      }
    }
  }
  return true;
}

std::vector<Vec2> offset_path(const std::vector<Vec2>& pts0, int side,
                              const Rat& eps) {
  if (pts0.size() < 2) throw invalid_input("offset needs an edge");
  if (side != 1 && side != -1) throw invalid_input("offset side must be +1 or -1");
  if (eps <= 0) throw invalid_input("offset scale must be positive");
  // merge straight runs so every interior joint genuinely turns
  std::vector<Vec2> pts{pts0.front()};
  for (std::size_t i = 1; i + 1 < pts0.size(); ++i) {
    const Vec2 d0 = pts0[i] - pts.back();
    const Vec2 d1 = pts0[i + 1] - pts0[i];
    if (d0 == Vec2{Rat(0), Rat(0)} || d1 == Vec2{Rat(0), Rat(0)})
      throw invalid_input("offset path has a repeated point");
    if (d0.cross(d1) == 0 && d0.dot(d1) > 0) continue;
    pts.push_back(pts0[i]);
  }
  pts.push_back(pts0.back());
  const Rat s = eps * Rat(side);
  auto normal = [](const Vec2& d) { return Vec2{-d.y, d.x}; };
  std::vector<Vec2> out;
  out.push_back(pts[0] + normal(pts[1] - pts[0]) * s);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Vec2 d0 = pts[i] - pts[i - 1], d1 = pts[i + 1] - pts[i];
    const Vec2 n0 = normal(d0), n1 = normal(d1);
    const Rat turn = d0.cross(d1);
    if (turn == 0) throw structure_defect("offset path doubles back");
    if ((turn > 0) == (side > 0)) {
      // joint turns into the offset side: meet the two offset lines
      const Rat t = (n1 - n0).cross(d1) * s / turn;
      out.push_back(pts[i] + n0 * s + d0 * t);
    } else {
      out.push_back(pts[i] + n0 * s);
      out.push_back(pts[i] + n1 * s);
    }
  }
  out.push_back(pts.back() + normal(pts.back() - pts[pts.size() - 2]) * s);
  return out;
}

}  // namespace ksys
