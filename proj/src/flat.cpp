#include "ksys/flat.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

#include "ksys/arrangement.hpp"
#include "ksys/util.hpp"

namespace ksys {

namespace {

Rat frac_part(const Rat& r) { return r - Rat(rat_floor(r)); }

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

struct Lift {
  std::vector<Vec2> pts;  // one point per edge plus one
  bool closed = false;
  Vec2 T;  // closing translation, zero for arcs
  std::size_t edges() const { return pts.size() - 1; }
};

Lift make_lift(const FlatCurve& c) {
  Lift l;
  l.pts = lift_curve(c);
  l.closed = c.closed;
  if (c.closed) l.T = l.pts.back() - l.pts.front();
  return l;
}

enum class Contact { none, crossing, endpoint, degenerate };

// Exact contact classification of two segments. endpoint means a clean touch
// at a single shared endpoint; any tangency, overlap, or vertex-on-interior
// configuration is degenerate.
Contact seg_contact(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                    const Vec2& q1) {
  const Vec2 dp = p1 - p0, dq = q1 - q0;
  const Rat d1 = dp.cross(q0 - p0);
  const Rat d2 = dp.cross(q1 - p0);
  const Rat d3 = dq.cross(p0 - q0);
  const Rat d4 = dq.cross(p1 - q0);
  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // collinear: compare parameter intervals along dp
    Rat a1 = dp.dot(dp);
    Rat b0 = (q0 - p0).dot(dp), b1 = (q1 - p0).dot(dp);
    if (b0 > b1) std::swap(b0, b1);
    const Rat lo = b0 > 0 ? b0 : Rat(0);
    const Rat hi = b1 < a1 ? b1 : a1;
    if (lo > hi) return Contact::none;
    if (lo == hi) return Contact::endpoint;
    return Contact::degenerate;
  }
  if (p0 == q0 || p0 == q1 || p1 == q0 || p1 == q1) {
    // a single shared endpoint (two shared points would be collinear); the
    // free endpoints must stay off the partner segment
    const Vec2& sp = (p0 == q0 || p0 == q1) ? p0 : p1;
    const Vec2& pf = (sp == p0) ? p1 : p0;
    const Vec2& qf = (sp == q0) ? q1 : q0;
    if (point_on_segment(qf, p0, p1) || point_on_segment(pf, q0, q1))
      return Contact::degenerate;
    return Contact::endpoint;
  }
  const Rat s12 = d1 * d2, s34 = d3 * d4;
  if (s12 < 0 && s34 < 0) return Contact::crossing;
  if (s12 > 0 || s34 > 0) return Contact::none;
  return Contact::degenerate;
}

struct Event {
  std::size_t ea = 0, eb = 0;
  std::int64_t tx = 0, ty = 0;
  Contact c = Contact::none;
};

struct SegBox {
  Rat x0, x1, y0, y1;
};

SegBox seg_box(const Vec2& a, const Vec2& b) {
  SegBox s;
  s.x0 = a.x < b.x ? a.x : b.x;
  s.x1 = a.x < b.x ? b.x : a.x;
  s.y0 = a.y < b.y ? a.y : b.y;
  s.y1 = a.y < b.y ? b.y : a.y;
  return s;
}

struct IRange {
  std::int64_t lo = 0, hi = -1;
};

// Integer t with [b0 + t, b1 + t] meeting [a0, a1].
IRange trange(const Rat& a0, const Rat& a1, const Rat& b0, const Rat& b1) {
  IRange r;
  r.lo = to_i64(-rat_floor(b1 - a0));
  r.hi = to_i64(rat_floor(a1 - b0));
  if (r.hi - r.lo > 4096)
    throw invalid_input("curve spread too large for crossing enumeration");
  return r;
}

// Every contact between edges of A and integer translates of edges of B.
// With same == true (B is A) each unordered contact is visited once: pairs
// ea < eb at all translates, ea == eb only at lexicographically positive t.
std::vector<Event> scan_contacts(const Lift& A, const Lift& B, bool same) {
  std::vector<Event> out;
  std::vector<SegBox> bb(B.edges());
  for (std::size_t e = 0; e < B.edges(); ++e)
    bb[e] = seg_box(B.pts[e], B.pts[e + 1]);
  for (std::size_t ea = 0; ea < A.edges(); ++ea) {
    const SegBox ba = seg_box(A.pts[ea], A.pts[ea + 1]);
    for (std::size_t eb = same ? ea : 0; eb < B.edges(); ++eb) {
      const IRange rx = trange(ba.x0, ba.x1, bb[eb].x0, bb[eb].x1);
      const IRange ry = trange(ba.y0, ba.y1, bb[eb].y0, bb[eb].y1);
      for (std::int64_t tx = rx.lo; tx <= rx.hi; ++tx) {
        for (std::int64_t ty = ry.lo; ty <= ry.hi; ++ty) {
          if (same && ea == eb && (tx < 0 || (tx == 0 && ty <= 0))) continue;
          const Vec2 t{Rat(tx), Rat(ty)};
          const Contact c = seg_contact(A.pts[ea], A.pts[ea + 1],
                                        B.pts[eb] + t, B.pts[eb + 1] + t);
          if (c != Contact::none) out.push_back({ea, eb, tx, ty, c});
        }
      }
    }
  }
  return out;
}

// Clean endpoint touches of a curve with itself are exactly the chain
// adjacencies: consecutive edges, the closing wrap, a one-edge closed curve
// meeting its own translate end to end, and an arc closing up with its two
// endpoints at the same torus point.
bool self_endpoint_ok(const Lift& A, const Event& e) {
  const Vec2 t{Rat(e.tx), Rat(e.ty)};
  if (e.eb == e.ea + 1 && e.tx == 0 && e.ty == 0) return true;
  if (!A.closed) {
    if (e.ea == 0 && e.eb == A.edges() - 1 &&
        A.pts.front() == A.pts.back() + t)
      return true;
    return A.edges() == 1 && A.pts.back() == A.pts.front() + t;
  }
  if (A.edges() == 1) return t == A.T || t == -A.T;
  if (e.ea == 0 && e.eb == A.edges() - 1 && t == -A.T) return true;
  return false;
}

// Arcs may share endpoints at punctures; anything else is a violation.
bool pair_endpoint_ok(const Lift& A, const Lift& B, const Event& e) {
  if (A.closed || B.closed) return false;
  const Vec2 t{Rat(e.tx), Rat(e.ty)};
  const Vec2 pa0 = A.pts[e.ea], pa1 = A.pts[e.ea + 1];
  const Vec2 qb0 = B.pts[e.eb] + t, qb1 = B.pts[e.eb + 1] + t;
  Vec2 shared;
  if (pa0 == qb0 || pa0 == qb1)
    shared = pa0;
  else if (pa1 == qb0 || pa1 == qb1)
    shared = pa1;
  else
    return false;
  const bool a_end = (e.ea == 0 && shared == A.pts.front()) ||
                     (e.ea == A.edges() - 1 && shared == A.pts.back());
  const bool b_end = (e.eb == 0 && shared == B.pts.front() + t) ||
                     (e.eb == B.edges() - 1 && shared == B.pts.back() + t);
  return a_end && b_end;
}

// Punctures may meet a curve only at arc endpoints.
bool punctures_clear(const Lift& A, const MarkedSurface& m) {
  for (const Vec2& p : m.punctures) {
    for (std::size_t ea = 0; ea < A.edges(); ++ea) {
      const Vec2& p0 = A.pts[ea];
      const Vec2& p1 = A.pts[ea + 1];
      const SegBox b = seg_box(p0, p1);
      const IRange rx = trange(b.x0, b.x1, p.x, p.x);
      const IRange ry = trange(b.y0, b.y1, p.y, p.y);
      for (std::int64_t tx = rx.lo; tx <= rx.hi; ++tx) {
        for (std::int64_t ty = ry.lo; ty <= ry.hi; ++ty) {
          const Vec2 q = p + Vec2{Rat(tx), Rat(ty)};
          if (q == p0) {
            if (!(ea == 0 && !A.closed)) return false;
          } else if (q == p1) {
            // interior vertices reappear as the next edge's start; the
            // closing point of a closed curve is its start vertex again
            if (ea == A.edges() - 1 && !A.closed) continue;
            if (ea == A.edges() - 1 && A.closed) return false;
          } else if (point_on_segment(q, p0, p1)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool self_ok(const Lift& A, const MarkedSurface* marked) {
  for (const Event& e : scan_contacts(A, A, true)) {
    if (e.c == Contact::degenerate) return false;
    if (e.c == Contact::endpoint && !self_endpoint_ok(A, e)) return false;
  }
  if (marked && !punctures_clear(A, *marked)) return false;
  return true;
}

long count_crossings(const std::vector<Event>& ev) {
  long n = 0;
  for (const Event& e : ev)
    if (e.c == Contact::crossing) ++n;
  return n;
}

// Deterministic nonzero direction, mixed from the vertex index and the
// cascade step so a persistent degeneracy cannot track the nudge.
Vec2 nudge_dir(std::size_t i, int k) {
  std::uint64_t h = (i + 1) * 0x9E3779B97F4A7C15ull +
                    std::uint64_t(k) * 0xBF58476D1CE4E5B9ull;
  h ^= h >> 31;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 29;
  auto nx = std::int64_t(h % 199) - 99;
  auto ny = std::int64_t((h / 199) % 197) - 98;
  if (nx == 0 && ny == 0) nx = 37;
  return {Rat(nx, 200), Rat(ny, 200)};
}

void nudge(FlatCurve& c, int k) {
  auto pts = lift_curve(c);
  const Rat scale(1, std::int64_t(1) << k);
  if (c.closed) {
    const Vec2 t = pts.back() - pts.front();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      pts[i] = pts[i] + nudge_dir(i, k) * scale;
    pts.back() = pts.front() + t;
  } else {
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
      pts[i] = pts[i] + nudge_dir(i, k) * scale;
  }
  c = normalize_lift(pts, c.closed);
}

void ensure_self(FlatCurve& c, const MarkedSurface* marked) {
  if (self_ok(make_lift(c), marked)) return;
  for (int k = 6; k <= 40; ++k) {
    FlatCurve cand = c;
    nudge(cand, k);
    if (self_ok(make_lift(cand), marked)) {
      c = cand;
      return;
    }
  }
  throw structure_defect("perturbation cascade left a curve degenerate");
}

}  // namespace

MarkedSurface torus_model() { return {SurfaceSig{1, 0}, {}}; }

MarkedSurface puncture_at(const MarkedSurface& m, const Vec2& x) {
  if (x.x < 0 || x.x >= 1 || x.y < 0 || x.y >= 1)
    throw invalid_input("puncture must lie in the unit square");
  for (const Vec2& p : m.punctures)
    if (p == x) throw invalid_input("puncture already marked");
  MarkedSurface out = m;
  out.punctures.push_back(x);
  out.sig.punctures += 1;
  return out;
}

void validate_curve(const FlatCurve& c) {
  if (c.verts.empty()) throw invalid_input("curve has no vertices");
  if (c.closed) {
    if (c.jumps.size() != c.verts.size())
      throw invalid_input("closed curve needs one jump per vertex");
  } else {
    if (c.verts.size() < 2) throw invalid_input("arc needs two endpoints");
    if (c.jumps.size() + 1 != c.verts.size())
      throw invalid_input("arc needs one jump per edge");
  }
  for (const Vec2& v : c.verts)
    if (v.x < 0 || v.x >= 1 || v.y < 0 || v.y >= 1)
      throw invalid_input("vertex outside the unit square");
  const auto pts = lift_curve(c);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] == pts[i + 1]) throw invalid_input("degenerate edge");
}

void validate_arc(const FlatCurve& c, const MarkedSurface& m) {
  validate_curve(c);
  if (c.closed) throw invalid_input("expected an arc");
  auto at_puncture = [&m](const Vec2& v) {
    for (const Vec2& p : m.punctures)
      if (p == v) return true;
    return false;
  };
  if (!at_puncture(c.verts.front()) || !at_puncture(c.verts.back()))
    throw invalid_input("arc endpoints must sit on punctures");
}

std::array<std::int64_t, 2> homology_class(const FlatCurve& c) {
  std::array<std::int64_t, 2> h{0, 0};
  for (const auto& j : c.jumps) {
    h[0] += j[0];
    h[1] += j[1];
  }
  return h;
}

std::vector<Vec2> lift_curve(const FlatCurve& c) {
  std::vector<Vec2> pts;
  pts.reserve(c.verts.size() + (c.closed ? 1 : 0));
  Vec2 off{Rat(0), Rat(0)};
  pts.push_back(c.verts[0]);
  for (std::size_t i = 0; i < c.jumps.size(); ++i) {
    off = off + Vec2{Rat(c.jumps[i][0]), Rat(c.jumps[i][1])};
    const Vec2& v = c.verts[(i + 1) % c.verts.size()];
    pts.push_back(v + off);
  }
  return pts;
}

FlatCurve normalize_lift(const std::vector<Vec2>& pts, bool closed) {
  if (pts.size() < 2) throw invalid_input("lift needs at least one edge");
  FlatCurve c;
  c.closed = closed;
  const std::size_t m = pts.size() - 1;
  if (closed) {
    const Vec2 t = pts.back() - pts.front();
    if (denominator(t.x) != 1 || denominator(t.y) != 1)
      throw invalid_input("closed lift must end on a lattice translate");
  }
  const std::size_t nverts = closed ? m : pts.size();
  c.verts.reserve(nverts);
  c.jumps.reserve(m);
  for (std::size_t i = 0; i < nverts; ++i)
    c.verts.push_back({frac_part(pts[i].x), frac_part(pts[i].y)});
  for (std::size_t i = 0; i < m; ++i) {
    c.jumps.push_back({to_i64(rat_floor(pts[i + 1].x) - rat_floor(pts[i].x)),
                       to_i64(rat_floor(pts[i + 1].y) - rat_floor(pts[i].y))});
  }
  validate_curve(c);
  return c;
}

FlatCurve line_curve(const LatticeCurve& c, const Rat& offset) {
  if (canonicalize(c.p, c.q) != c)
    throw invalid_input("line_curve needs a canonical class");
  if (offset < 0 || offset >= 1)
    throw invalid_input("line offset must lie in [0,1)");
  std::vector<Rat> ts{Rat(0)};
  for (std::int64_t j = 1; j <= c.p; ++j) {
    const Rat t = (Rat(j) - offset) / Rat(c.p);
    if (t < 1) ts.push_back(t);
  }
  const std::int64_t aq = c.q < 0 ? -c.q : c.q;
  for (std::int64_t j = 1; j < aq; ++j) ts.push_back(Rat(j, aq));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Vec2> pts;
  pts.reserve(ts.size() + 1);
  for (const Rat& t : ts)
    pts.push_back({offset + t * Rat(c.p), t * Rat(c.q)});
  pts.push_back({offset + Rat(c.p), Rat(c.q)});
  return normalize_lift(pts, true);
}

FlatCurve translate_curve(const FlatCurve& c, const Vec2& t) {
  auto pts = lift_curve(c);
  for (Vec2& p : pts) p = p + t;
  return normalize_lift(pts, c.closed);
}

FlatCurve wiggle_curve(const FlatCurve& c, int n, const Rat& amp) {
  validate_curve(c);
  if (n < 1) throw invalid_input("wiggle count must be positive");
  if (amp <= 0) throw invalid_input("wiggle depth must be positive");
  const auto pts = lift_curve(c);
  const Vec2 w0 = pts[0], w1 = pts[1];
  const Vec2 d = w1 - w0;
  const Vec2 r{-d.y, d.x};
  const Rat f(1, 2);
  const Rat lam(1, 8 * (std::int64_t(n) + 1));
  std::vector<Vec2> out;
  out.reserve(pts.size() + 2 * std::size_t(n) + 1);
  out.push_back(w0);
  out.push_back(w0 + d * f);
  // comb teeth: each overshoot behind the edge start and return adds one
  // band of strictly increasing lanes, so the teeth cannot meet each other
  for (int j = 1; j <= n; ++j) {
    const Rat back = amp + Rat(j - 1) * lam;
    out.push_back(w0 - d * back + r * (Rat(2 * j - 1) * lam));
    out.push_back(w0 + d * (f + Rat(j) * lam) + r * (Rat(2 * j) * lam));
  }
  // drop back onto the edge within one lane step, so period translates of
  // the teeth stay clear of the descent
  out.push_back(w0 + d * (f + Rat(n + 1) * lam));
  for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(pts[i]);
  FlatCurve w = normalize_lift(out, c.closed);
  const Lift lw = make_lift(w);
  if (!self_ok(lw, nullptr))
    throw invalid_input("wiggle parameters break general position");
  if (count_crossings(scan_contacts(lw, lw, true)) != 0)
    throw invalid_input("wiggle parameters break embeddedness");
  return w;
}

bool self_general_position(const FlatCurve& a, const MarkedSurface* marked) {
  validate_curve(a);
  return self_ok(make_lift(a), marked);
}

bool general_position(const FlatCurve& a, const FlatCurve& b,
                      const MarkedSurface* marked) {
  if (!self_general_position(a, marked) || !self_general_position(b, marked))
    return false;
  const Lift la = make_lift(a), lb = make_lift(b);
  for (const Event& e : scan_contacts(la, lb, false)) {
    if (e.c == Contact::degenerate) return false;
    if (e.c == Contact::endpoint && !pair_endpoint_ok(la, lb, e)) return false;
  }
  return true;
}

void ensure_general_position(FlatCurve& a, FlatCurve& b,
                             const MarkedSurface* marked) {
  FlatCurve ca = a, cb = b;
  ensure_self(ca, marked);
  ensure_self(cb, marked);
  if (general_position(ca, cb, marked)) {
    a = ca;
    b = cb;
    return;
  }
  for (int k = 6; k <= 40; ++k) {
    FlatCurve nb = cb;
    nudge(nb, k);
    if (general_position(ca, nb, marked)) {
      a = ca;
      b = nb;
      return;
    }
    FlatCurve na = ca;
    nudge(na, k + 7);
    if (general_position(na, nb, marked)) {
      a = na;
      b = nb;
      return;
    }
  }
  throw structure_defect("perturbation cascade left the pair degenerate");
}

namespace {

// -1 when the system is clean, else the index of a curve to perturb. Pair
// degeneracies blame the later curve; a triple point blames the later curve
// of the pair that rediscovered the crossing position.
long first_system_defect(const std::vector<FlatCurve>& sys,
                         const MarkedSurface* marked) {
  std::vector<Lift> lifts;
  lifts.reserve(sys.size());
  for (const FlatCurve& c : sys) lifts.push_back(make_lift(c));
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (!self_ok(lifts[i], marked)) return long(i);
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j)
      for (const Event& e : scan_contacts(lifts[i], lifts[j], false)) {
        if (e.c == Contact::degenerate) return long(j);
        if (e.c == Contact::endpoint && !pair_endpoint_ok(lifts[i], lifts[j], e))
          return long(j);
      }
  std::set<Vec2, bool (*)(const Vec2&, const Vec2&)> seen(vec2_less);
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j)
      for (const CrossingData& cd : enumerate_crossings(sys[i], sys[j]))
        if (!seen.insert({frac_part(cd.pos_a.x), frac_part(cd.pos_a.y)}).second)
          return long(j);
  return -1;
}

}  // namespace

bool system_general_position(const std::vector<FlatCurve>& sys,
                             const MarkedSurface* marked) {
  for (const FlatCurve& c : sys) validate_curve(c);
  return first_system_defect(sys, marked) < 0;
}

void ensure_general_position(std::vector<FlatCurve>& sys,
                             const MarkedSurface* marked) {
  for (FlatCurve& c : sys) {
    validate_curve(c);
    ensure_self(c, marked);
  }
  for (int k = 6; k <= 40; ++k) {
    const long bad = first_system_defect(sys, marked);
    if (bad < 0) return;
    nudge(sys[std::size_t(bad)], k);
  }
  throw structure_defect("perturbation cascade left the system degenerate");
}

std::vector<CrossingData> enumerate_crossings(const FlatCurve& a,
                                              const FlatCurve& b) {
  if (!general_position(a, b, nullptr))
    throw invalid_input("curves are not in general position");
  const Lift la = make_lift(a), lb = make_lift(b);
  std::vector<CrossingData> out;
  for (const Event& e : scan_contacts(la, lb, false)) {
    if (e.c != Contact::crossing) continue;
    const Vec2 t{Rat(e.tx), Rat(e.ty)};
    const Vec2 p0 = la.pts[e.ea];
    const Vec2 dp = la.pts[e.ea + 1] - p0;
    const Vec2 q0 = lb.pts[e.eb] + t;
    const Vec2 dq = lb.pts[e.eb + 1] + t - q0;
    const Rat denom = dp.cross(dq);
    CrossingData cd;
    cd.ea = e.ea;
    cd.eb = e.eb;
    cd.ta = (q0 - p0).cross(dq) / denom;
    cd.tb = (q0 - p0).cross(dp) / denom;
    cd.pos_a = p0 + dp * cd.ta;
    cd.pos_b = lb.pts[e.eb] + dq * cd.tb;
    if (cd.pos_a != q0 + dq * cd.tb)
      throw structure_defect("crossing solver disagreement");
    out.push_back(std::move(cd));
  }
  std::sort(out.begin(), out.end(),
            [](const CrossingData& u, const CrossingData& v) {
              if (u.ea != v.ea) return u.ea < v.ea;
              if (u.ta != v.ta) return u.ta < v.ta;
              if (u.eb != v.eb) return u.eb < v.eb;
              return u.tb < v.tb;
            });
  return out;
}

long raw_crossings(const FlatCurve& a, const FlatCurve& b) {
  FlatCurve ca = a, cb = b;
  ensure_general_position(ca, cb);
  return count_crossings(scan_contacts(make_lift(ca), make_lift(cb), false));
}

long self_crossings(const FlatCurve& a) {
  FlatCurve c = a;
  ensure_self(c, nullptr);
  const Lift l = make_lift(c);
  return count_crossings(scan_contacts(l, l, true));
}

std::vector<std::size_t> enclosed_punctures(const FlatCurve& c,
                                            const MarkedSurface& m) {
  validate_curve(c);
  if (!c.closed) throw invalid_input("enclosure needs a closed curve");
  const auto h = homology_class(c);
  if (h[0] != 0 || h[1] != 0)
    throw invalid_input("enclosure needs a null-homologous curve");
  auto poly = lift_curve(c);
  poly.pop_back();  // closing point repeats the start
  SegBox bb = seg_box(poly[0], poly[0]);
  for (const Vec2& p : poly) {
    if (p.x < bb.x0) bb.x0 = p.x;
    if (p.x > bb.x1) bb.x1 = p.x;
    if (p.y < bb.y0) bb.y0 = p.y;
    if (p.y > bb.y1) bb.y1 = p.y;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.punctures.size(); ++i) {
    const Vec2& p = m.punctures[i];
    const IRange rx = trange(bb.x0, bb.x1, p.x, p.x);
    const IRange ry = trange(bb.y0, bb.y1, p.y, p.y);
    bool inside = false;
    for (std::int64_t tx = rx.lo; tx <= rx.hi && !inside; ++tx) {
      for (std::int64_t ty = ry.lo; ty <= ry.hi && !inside; ++ty) {
        const Vec2 q = p + Vec2{Rat(tx), Rat(ty)};
        for (std::size_t e = 0; e < poly.size(); ++e)
          if (point_on_segment(q, poly[e], poly[(e + 1) % poly.size()]))
            throw invalid_input("puncture lies on the curve");
        inside = winding_number(poly, q) != 0;
      }
    }
    if (inside) out.push_back(i);
  }
  return out;
}

}  // namespace ksys
