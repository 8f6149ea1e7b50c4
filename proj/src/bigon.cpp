#include <algorithm>
#include <cstdint>

#include "ksys/arrangement.hpp"
#include "ksys/flat.hpp"
#include "ksys/util.hpp"

namespace ksys {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Replace the side of the bigon carried by curve a with a copy of the other
// side pushed off b, away from the collapsing disk. eta trims the kept part
// of a just short of the corners, eps scales the push.
FlatCurve reroute(const FlatCurve& a, const Arrangement& arr, const ArrFace& f,
                  const Rat& eta, const Rat& eps) {
  int ha = -1, hb = -1;
  for (const int h : f.hedges) (arr.half[h].curve == 0 ? ha : hb) = h;
  const int haf = arr.half[ha].forward ? ha : arr.half[ha].twin;
  const int s = arr.half[haf].from;
  const int e = arr.half[haf].to;
  const ArrNode& ns = arr.nodes[s];
  const ArrNode& ne = arr.nodes[e];
  const auto pts = lift_curve(a);
  const std::size_t m = pts.size() - 1;
  const Vec2 T = a.closed ? pts.back() - pts.front() : Vec2{Rat(0), Rat(0)};

  const Vec2 des = pts[ns.edge_a + 1] - pts[ns.edge_a];
  const Vec2 dee = pts[ne.edge_a + 1] - pts[ne.edge_a];
  const Vec2 pp = pts[ns.edge_a] + des * (ns.ta * (Rat(1) - eta));
  const Vec2 qp = pts[ne.edge_a] + dee * (ne.ta + eta * (Rat(1) - ne.ta));

  const int hbf = arr.half[hb].from == s ? hb : arr.half[hb].twin;
  std::vector<Vec2> corridor;
  corridor.reserve(arr.half[hbf].chain.size());
  for (const Vec2& r : arr.half[hbf].chain) corridor.push_back(ns.pos_a + r);
  const Vec2 da = arr.half[haf].dir_from;
  const Vec2 db = arr.half[hbf].dir_from;
  const int side = db.cross(da) > 0 ? -1 : 1;
  const auto off = offset_path(corridor, side, eps);

  std::vector<Vec2> chain;
  if (a.closed) {
    const bool wrapped = ne.edge_a < ns.edge_a ||
                         (ne.edge_a == ns.edge_a && ne.ta < ns.ta);
    chain.push_back(qp);
    Vec2 shift{Rat(0), Rat(0)};
    if (!wrapped) {
      for (std::size_t i = ne.edge_a + 1; i <= m; ++i) chain.push_back(pts[i]);
      for (std::size_t i = 1; i <= ns.edge_a; ++i) chain.push_back(pts[i] + T);
      shift = T;
    } else {
      for (std::size_t i = ne.edge_a + 1; i <= ns.edge_a; ++i)
        chain.push_back(pts[i]);
    }
    chain.push_back(pp + shift);
    for (const Vec2& p : off) chain.push_back(p + shift);
    chain.push_back(qp + T);
    return normalize_lift(chain, true);
  }
  chain.assign(pts.begin(), pts.begin() + long(ns.edge_a) + 1);
  chain.push_back(pp);
  for (const Vec2& p : off) chain.push_back(p);
  chain.push_back(qp);
  for (std::size_t i = ne.edge_a + 1; i < pts.size(); ++i)
    chain.push_back(pts[i]);
  return normalize_lift(chain, false);
}

bool candidate_ok(const FlatCurve& na, const FlatCurve& b,
                  const MarkedSurface& marked, long want) {
  if (!general_position(na, b, &marked)) return false;
  if (self_crossings(na) != 0) return false;
  return raw_crossings(na, b) == want;
}

}  // namespace

BigonResult bigon_reduce(const FlatCurve& a0, const FlatCurve& b0,
                         const MarkedSurface& marked,
                         const BigonOptions& opt) {
  FlatCurve a = a0, b = b0;
  validate_curve(a);
  validate_curve(b);
  if (!a.closed) validate_arc(a, marked);
  if (!b.closed) validate_arc(b, marked);
  ensure_general_position(a, b, &marked);
  if (self_crossings(a) != 0 || self_crossings(b) != 0)
    throw invalid_input("bigon reduction needs embedded curves");

  long raw = raw_crossings(a, b);
  const long cap = raw;
  int removed = 0;
  std::uint64_t rng = opt.choice_seed;
  while (raw > 0) {
    const Arrangement arr = build_arrangement(a, b);
    std::vector<const ArrFace*> cands;
    for (const ArrFace& f : arr.faces)
      if (f.bigon && face_puncture_free(arr, f, marked)) cands.push_back(&f);
    if (cands.empty()) break;
    const ArrFace& pick =
        opt.choice_seed == 0 ? *cands[0]
                             : *cands[splitmix(rng) % cands.size()];
    bool done = false;
    for (int k = 4; k <= 40 && !done; ++k) {
      const Rat step(1, std::int64_t(1) << k);
      FlatCurve cand;
      try {
        // the push-off must be an order smaller than the corner trim: the
        // offset corridor crosses the line of a within eps/sin(corner angle)
        // of the corner, and that window has to fall inside the trimmed span
        cand = reroute(a, arr, pick, step, step * step);
      } catch (const invalid_input&) {
        continue;
      }
      if (candidate_ok(cand, b, marked, raw - 2)) {
        a = std::move(cand);
        raw -= 2;
        ++removed;
        done = true;
      }
    }
    if (!done) throw structure_defect("bigon removal cascade exhausted");
    if (removed > cap) throw structure_defect("bigon reduction failed to terminate");
  }
  return {std::move(a), std::move(b), raw, removed};
}

}  // namespace ksys
