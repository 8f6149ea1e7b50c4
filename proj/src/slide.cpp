#include "ksys/slide.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "ksys/arrangement.hpp"
#include "ksys/util.hpp"

namespace ksys {

namespace {

bool is_integer(const Rat& r) { return denominator(r) == 1; }

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

struct CurvePos {
  std::size_t edge = 0;
  Rat t;
};

// All parameters (edge, t in [0,1)) whose torus image is x.
std::vector<CurvePos> locate_points(const FlatCurve& c, const Vec2& x) {
  const auto pts = lift_curve(c);
  std::vector<CurvePos> out;
  for (std::size_t e = 0; e + 1 < pts.size(); ++e) {
    const Vec2 p = pts[e];
    const Vec2 d = pts[e + 1] - p;
    auto push_if = [&](const Rat& t) {
      if (t < 0 || t >= 1) return;
      const Vec2 q = p + d * t;
      if (is_integer(q.x - x.x) && is_integer(q.y - x.y)) out.push_back({e, t});
    };
    // p + t d = x + z componentwise over the integer translates z
    const bool use_x = d.x != 0;
    const Rat dc = use_x ? d.x : d.y;
    const Rat pc = use_x ? p.x : p.y;
    const Rat xc = use_x ? x.x : x.y;
    const Rat pe = pc + dc;
    const Rat lo = std::min(pc, pe) - xc;
    const Rat hi = std::max(pc, pe) - xc;
    if (rat_floor(hi) - rat_floor(lo) > 4096)
      throw invalid_input("curve spread too large for point location");
    for (BigInt z = rat_floor(lo); Rat(z) <= hi; ++z)
      push_if((xc + Rat(z) - pc) / dc);
  }
  return out;
}

// Traversal frame along the base curve from the base point.
struct Frame {
  std::vector<Vec2> pts;  // lift, one point per edge plus one
  Vec2 T;
  std::size_t m = 0;
  std::size_t ex = 0;
  Rat tx;
  int sigma = 1;
};

Vec2 vert_at(const Frame& fr, long i) {
  long w = 0;
  while (i >= long(fr.m)) {
    i -= long(fr.m);
    ++w;
  }
  while (i < 0) {
    i += long(fr.m);
    --w;
  }
  return fr.pts[std::size_t(i)] + fr.T * Rat(w);
}

// Offset in edge-parameter units, in (0, m]; the base point itself is never
// a crossing so 0 cannot occur.
Rat offset_of(const Frame& fr, std::size_t e, const Rat& t) {
  const Rat L = Rat(std::int64_t(e)) + t;
  const Rat Lx = Rat(std::int64_t(fr.ex)) + fr.tx;
  Rat d = fr.sigma > 0 ? Rat(L - Lx) : Rat(Lx - L);
  if (d <= 0) d += Rat(std::int64_t(fr.m));
  return d;
}

Rat lin_of(const Frame& fr, const Rat& u) {
  const Rat Lx = Rat(std::int64_t(fr.ex)) + fr.tx;
  return fr.sigma > 0 ? Rat(Lx + u) : Rat(Lx - u);
}

Vec2 point_at(const Frame& fr, const Rat& u) {
  const Rat L = lin_of(fr, u);
  const BigInt fe = rat_floor(L);
  const Rat t = L - Rat(fe);
  const long e = long(to_i64(fe));
  const Vec2 a = vert_at(fr, e);
  return a + (vert_at(fr, e + 1) - a) * t;
}

// Polyline between two traversal offsets u0 < u1, walked in the traversal
// direction with every base-curve vertex in between.
std::vector<Vec2> sub_path(const Frame& fr, const Rat& u0, const Rat& u1) {
  std::vector<Vec2> out{point_at(fr, u0)};
  const Rat L0 = lin_of(fr, u0), L1 = lin_of(fr, u1);
  if (fr.sigma > 0) {
    for (BigInt i = rat_floor(L0) + 1; Rat(i) < L1; ++i)
      out.push_back(vert_at(fr, long(to_i64(i))));
  } else {
    BigInt i = rat_floor(L0);
    if (Rat(i) == L0) --i;
    for (; Rat(i) > L1; --i) out.push_back(vert_at(fr, long(to_i64(i))));
  }
  out.push_back(point_at(fr, u1));
  return out;
}

// One full period of a closed curve from (edge, t_in) to (edge, t_out) one
// translate along, walked forward (dir > 0) or backward.
std::vector<Vec2> loop_path(const FlatCurve& c, std::size_t edge,
                            const Rat& t_in, const Rat& t_out, int dir) {
  const auto pts = lift_curve(c);
  const std::size_t m = pts.size() - 1;
  const Vec2 T = pts.back() - pts.front();
  auto vat = [&](long i) {
    long w = 0;
    while (i >= long(m)) {
      i -= long(m);
      ++w;
    }
    while (i < 0) {
      i += long(m);
      --w;
    }
    return pts[std::size_t(i)] + T * Rat(w);
  };
  const Vec2 d = pts[edge + 1] - pts[edge];
  std::vector<Vec2> out{pts[edge] + d * t_in};
  if (dir > 0) {
    for (long i = long(edge) + 1; i <= long(edge + m); ++i)
      out.push_back(vat(i));
    out.push_back(pts[edge] + d * t_out + T);
  } else {
    for (long i = long(edge); i > long(edge) - long(m); --i)
      out.push_back(vat(i));
    out.push_back(pts[edge] + d * t_out - T);
  }
  return out;
}

struct Entry {
  std::size_t curve = 0;
  CrossingData y;  // first crossing along the traversal
  Rat off_y;
  std::vector<Rat> offs;  // all crossing offsets of this curve, ascending
  std::size_t first_index = 0;
};

struct StarData {
  Frame fr;
  std::vector<Entry> entries;    // ordered by off_y
  std::vector<Rat> all_offsets;  // every crossing of every curve, ascending
};

StarData analyze(const std::vector<FlatCurve>& system, std::size_t gi,
                 const Vec2& x, int orientation) {
  if (gi >= system.size())
    throw invalid_input("base curve index out of range");
  if (orientation != 1 && orientation != -1)
    throw invalid_input("orientation must be +1 or -1");
  if (x.x < 0 || x.x >= 1 || x.y < 0 || x.y >= 1)
    throw invalid_input("base point must lie in the unit square");
  for (const FlatCurve& c : system)
    if (!c.closed) throw invalid_input("slide needs closed curves");
  if (!system_general_position(system))
    throw invalid_input("system must be in general position");
  for (const FlatCurve& c : system)
    if (self_crossings(c) != 0)
      throw invalid_input("slide needs embedded curves");
  const FlatCurve& gamma = system[gi];
  const auto xs = locate_points(gamma, x);
  if (xs.empty()) throw invalid_input("base point must lie on the base curve");
  for (std::size_t i = 0; i < system.size(); ++i)
    if (i != gi && !locate_points(system[i], x).empty())
      throw invalid_input("base point must miss the other curves");

  StarData sd;
  sd.fr.pts = lift_curve(gamma);
  sd.fr.T = sd.fr.pts.back() - sd.fr.pts.front();
  sd.fr.m = sd.fr.pts.size() - 1;
  sd.fr.ex = xs[0].edge;
  sd.fr.tx = xs[0].t;
  sd.fr.sigma = orientation;

  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i == gi) continue;
    const auto cds = enumerate_crossings(gamma, system[i]);
    if (cds.empty()) continue;  // not in the star of the base curve
    Entry en;
    en.curve = i;
    std::size_t best = 0;
    for (std::size_t j = 0; j < cds.size(); ++j) {
      en.offs.push_back(offset_of(sd.fr, cds[j].ea, cds[j].ta));
      sd.all_offsets.push_back(en.offs.back());
      if (en.offs[j] < en.offs[best]) best = j;
    }
    en.y = cds[best];
    en.off_y = en.offs[best];
    std::sort(en.offs.begin(), en.offs.end());
    sd.entries.push_back(std::move(en));
  }
  std::sort(sd.all_offsets.begin(), sd.all_offsets.end());
  std::sort(sd.entries.begin(), sd.entries.end(),
            [](const Entry& u, const Entry& v) { return u.off_y < v.off_y; });
  for (Entry& en : sd.entries)
    en.first_index =
        std::size_t(std::lower_bound(sd.all_offsets.begin(),
                                     sd.all_offsets.end(), en.off_y) -
                    sd.all_offsets.begin());
  return sd;
}

// Strands of the earlier arc still crossing the base curve under the later
// entry: every crossing before off_later except the entry itself.
long strands_below(const std::vector<Rat>& offs, const Rat& off_later) {
  return long(std::lower_bound(offs.begin(), offs.end(), off_later) -
              offs.begin()) -
         1;
}

SlideArc build_arc(const std::vector<FlatCurve>& system, const Frame& fr,
                   const Entry& en, std::size_t rank, const Rat& u_f,
                   const Rat& s, const Rat& gap_before,
                   const std::vector<std::pair<std::size_t, Rat>>& contacts) {
  const FlatCurve& alpha = system[en.curve];

  // corridor core, backed off the entry within its crossing-free window.
  // Later entries run in lanes a full factor of s closer to the base curve:
  // the offsets pick up per-edge length factors, and only a vanishing ratio
  // beats those uniformly once s is small.
  const Rat vert_gap = fr.sigma > 0 ? en.y.ta : Rat(1) - en.y.ta;
  const Rat u_g = s * std::min(vert_gap, gap_before);
  Rat lane = s * s;
  for (std::size_t q = 0; q < rank; ++q) lane *= s;
  const auto core = sub_path(fr, u_f, en.off_y - u_g);
  const auto lane_out = offset_path(core, 1, lane);
  const auto lane_ret = offset_path(core, -1, lane);

  // trim the loop just off the entry, inside its own contact-free window
  const Rat tb = en.y.tb;
  Rat win = std::min(tb, Rat(1) - tb);
  for (const auto& [e, t] : contacts)
    if (e == en.y.eb && t != tb)
      win = std::min(win, t > tb ? Rat(t - tb) : Rat(tb - t));
  const Rat trim = s * win;

  // enter along whichever germ of the loop points into the left lane
  const Vec2 dg = fr.pts[en.y.ea + 1] - fr.pts[en.y.ea];
  const Vec2 dt = fr.sigma > 0 ? dg : -dg;
  const auto apts = lift_curve(alpha);
  const Vec2 da = apts[en.y.eb + 1] - apts[en.y.eb];
  const int dir = dt.cross(da) > 0 ? 1 : -1;
  const Rat t_in = dir > 0 ? Rat(tb + trim) : Rat(tb - trim);
  const Rat t_out = dir > 0 ? Rat(tb - trim) : Rat(tb + trim);

  auto loop = loop_path(alpha, en.y.eb, t_in, t_out, dir);
  const Vec2 shift = point_at(fr, en.off_y) - en.y.pos_b;
  for (Vec2& p : loop) p = p + shift;
  const Vec2 Ta = apts.back() - apts.front();
  const Vec2 disp = dir > 0 ? Ta : -Ta;

  std::vector<Vec2> chain;
  chain.reserve(lane_out.size() + lane_ret.size() + loop.size() + 2);
  const Vec2 x0 = point_at(fr, Rat(0));
  chain.push_back(x0);
  chain.insert(chain.end(), lane_out.begin(), lane_out.end());
  chain.insert(chain.end(), loop.begin(), loop.end());
  for (std::size_t i = lane_ret.size(); i-- > 0;)
    chain.push_back(lane_ret[i] + disp);
  chain.push_back(x0 + disp);

  SlideArc sa;
  sa.curve = en.curve;
  sa.arc = normalize_lift(chain, false);
  sa.gamma_sub = normalize_lift(sub_path(fr, Rat(0), en.off_y), false);
  sa.first_index = en.first_index;
  sa.first_offset = en.off_y;
  sa.strand_offsets = en.offs;
  return sa;
}

}  // namespace

SlideResult slide_to_arcs(const std::vector<FlatCurve>& system,
                          std::size_t gamma_index, const Vec2& x,
                          int orientation) {
  StarData sd = analyze(system, gamma_index, x, orientation);
  SlideResult res;
  res.system = system;
  res.gamma_index = gamma_index;
  res.x = x;
  res.orientation = orientation;
  res.marked = puncture_at(torus_model(), x);
  if (sd.entries.empty()) return res;
  const std::size_t n = sd.entries.size();
  if (n >= 62) throw invalid_input("too many curves meet the base curve");

  // drawn loop pair crossings, and each curve's contact parameters for the
  // entry trim windows
  std::vector<std::vector<long>> loops(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      loops[i][j] = long(enumerate_crossings(system[sd.entries[i].curve],
                                             system[sd.entries[j].curve])
                             .size());
  std::vector<std::vector<std::pair<std::size_t, Rat>>> contacts(
      system.size());
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t j = i + 1; j < system.size(); ++j)
      for (const CrossingData& cd : enumerate_crossings(system[i], system[j])) {
        contacts[i].push_back({cd.ea, cd.ta});
        contacts[j].push_back({cd.eb, cd.tb});
      }
  const Rat first_vert =
      sd.fr.sigma > 0 ? (sd.fr.tx > 0 ? Rat(1) - sd.fr.tx : Rat(1))
                      : (sd.fr.tx > 0 ? sd.fr.tx : Rat(1));

  // Shrink the construction scale until the drawn picture is exact: each
  // arc simple, each pair transverse with two crossings per strand under
  // the later entry plus the loops' own crossings.
  for (int js = 6; js <= 40; ++js) {
    const Rat s(1, std::int64_t(1) << js);
    const Rat u_f = s * std::min(first_vert, sd.all_offsets.front());
    std::vector<SlideArc> arcs;
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      const Entry& en = sd.entries[r];
      const auto it = std::lower_bound(sd.all_offsets.begin(),
                                       sd.all_offsets.end(), en.off_y);
      const Rat gap_before = it == sd.all_offsets.begin()
                                 ? en.off_y
                                 : en.off_y - *std::prev(it);
      SlideArc sa = build_arc(system, sd.fr, en, r, u_f, s, gap_before,
                              contacts[en.curve]);
      validate_arc(sa.arc, res.marked);
      ok = self_general_position(sa.arc, &res.marked) &&
           self_crossings(sa.arc) == 0;
      arcs.push_back(std::move(sa));
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        ok = general_position(arcs[i].arc, arcs[j].arc, &res.marked);
        if (!ok) break;
        const long raw =
            long(enumerate_crossings(arcs[i].arc, arcs[j].arc).size());
        const long want =
            2 * strands_below(arcs[i].strand_offsets, arcs[j].first_offset) +
            loops[i][j];
        ok = raw == want;
      }
    if (ok) {
      res.arcs = std::move(arcs);
      return res;
    }
  }
  throw structure_defect("slide perturbation cascade exhausted");
}

SlideReport verify_slide_bound(const SlideResult& r, int k) {
  if (k < 1) throw invalid_input("k must be at least 1");
  StarData sd = analyze(r.system, r.gamma_index, r.x, r.orientation);
  if (sd.entries.size() != r.arcs.size())
    throw invalid_input("result does not match its system");
  for (std::size_t i = 0; i < r.arcs.size(); ++i) {
    if (sd.entries[i].curve != r.arcs[i].curve ||
        sd.entries[i].off_y != r.arcs[i].first_offset)
      throw invalid_input("result does not match its system");
    validate_arc(r.arcs[i].arc, r.marked);
  }
  SlideReport rep;
  rep.k = k;
  rep.bound = 3 * long(k) - 2;
  rep.within_bound = true;
  rep.certified = true;
  for (std::size_t i = 0; i < r.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < r.arcs.size(); ++j) {
      SlidePair pr;
      pr.a = i;
      pr.b = j;
      pr.count = bigon_reduce(r.arcs[i].arc, r.arcs[j].arc, r.marked).count;
      const long lp = long(enumerate_crossings(r.system[sd.entries[i].curve],
                                               r.system[sd.entries[j].curve])
                               .size());
      pr.certificate =
          2 * strands_below(sd.entries[i].offs, sd.entries[j].off_y) + lp;
      rep.max_count = std::max(rep.max_count, pr.count);
      if (pr.count > rep.bound) rep.within_bound = false;
      if (pr.count > pr.certificate) rep.certified = false;
      rep.pairs.push_back(pr);
    }
  return rep;
}

}  // namespace ksys
