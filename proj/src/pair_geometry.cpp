#include "ksys/pair_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <limits>
#include <set>
#include <tuple>
#include <vector>

#include "ksys/util.hpp"

namespace ksys {

Geo axis_of(const Mat2& m) {
  if (classify(m) != IsomClass::hyperbolic)
    throw invalid_input("axis requires a hyperbolic element");
  double scale = std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
  if (std::abs(m.c) < 1e-13 * scale) {
    Geo g;
    g.vertical = true;
    g.x = m.b / (m.d - m.a);
    return g;
  }
  double root = std::sqrt(trace(m) * trace(m) - 4.0);
  double p = (m.a - m.d + root) / (2 * m.c);
  double q = (m.a - m.d - root) / (2 * m.c);
  Geo g;
  g.c = (p + q) / 2;
  g.rho = std::abs(p - q) / 2;
  return g;
}

double inversive(const Geo& g1, const Geo& g2) {
  if (g1.vertical && g2.vertical) return 1.0;  // tangent at infinity
  if (g1.vertical) return std::abs(g1.x - g2.c) / g2.rho;
  if (g2.vertical) return std::abs(g2.x - g1.c) / g1.rho;
  double dc = g1.c - g2.c;
  return std::abs(dc * dc - g1.rho * g1.rho - g2.rho * g2.rho) / (2 * g1.rho * g2.rho);
}

namespace {

constexpr double degenerate_tol = 1e-9;
constexpr double param_dedup_tol = 1e-6;

// The apex of a geodesic sits at parameter zero of the standardized
// coordinate along it.
std::complex<double> apex(const Geo& g) {
  if (g.vertical) return {g.x, 1.0};
  return {g.c, g.rho};
}

double hyp_dist(std::complex<double> z, std::complex<double> w) {
  double n = std::norm(z - w);
  return std::acosh(1.0 + n / (2.0 * z.imag() * w.imag()));
}

std::complex<double> moebius(const Mat2& m, std::complex<double> z) {
  return (m.a * z + m.b) / (m.c * z + m.d);
}

// Images of the translate's ideal endpoints under the standardizer taking
// the reference axis to the imaginary axis.
bool endpoint_images(const Geo& ref, const Geo& t, double& u, double& v) {
  double e1, e2;
  bool e2_inf = false;
  if (t.vertical) {
    e1 = t.x;
    e2 = 0;
    e2_inf = true;
  } else {
    e1 = t.c - t.rho;
    e2 = t.c + t.rho;
  }
  if (ref.vertical) {
    if (e2_inf) return false;
    u = e1 - ref.x;
    v = e2 - ref.x;
    return true;
  }
  double p = ref.c - ref.rho, q = ref.c + ref.rho;
  auto img = [&](double e, bool at_inf, double& out) {
    if (at_inf) {
      out = 1.0;
      return true;
    }
    double den = e - q;
    if (std::abs(den) < 1e-300) return false;
    out = (e - p) / den;
    return true;
  };
  return img(e1, false, u) && img(e2, e2_inf, v);
}

long long round_key(double x) {
  double cl = std::clamp(x, -1e9, 1e9);
  return (long long)std::llround(cl * 1e7);
}

struct Crossing {
  double t;
  double angle;
};

}  // namespace

PairGeometry pair_geometry(const HyperbolicStructure& st, const std::string& wa,
                           const std::string& wb, const PairOptions& opt) {
  PairGeometry out;
  if (!primitive_word(wa) || !primitive_word(wb))
    throw invalid_input("pair geometry expects primitive classes");
  if (canonical_class_word(wa) == canonical_class_word(wb)) {
    out.verdict = PairVerdict::identical;
    out.certified = true;
    return out;
  }

  Mat2 Ma = eval_word(st.generators, wa);
  Mat2 Mb = eval_word(st.generators, wb);
  double la = translation_length(Ma);
  double lb = translation_length(Mb);
  Geo axis_a = axis_of(Ma);
  Geo axis_b = axis_of(Mb);
  std::complex<double> p0 = apex(axis_a), q0 = apex(axis_b);

  const std::size_t ng = st.generators.size();
  std::vector<Mat2> letters(2 * ng);
  for (std::size_t i = 0; i < ng; ++i) {
    letters[i] = st.generators[i];
    letters[ng + i] = inverse(st.generators[i]);
  }
  auto letter_inverse = [ng](std::size_t li) { return li < ng ? li + ng : li - ng; };

  // Translate axes are carried by their ideal endpoints.  Conjugating
  // matrices instead overflows the usable precision once a short cuff makes
  // the generator entries large, and the resulting noise fabricates
  // distinct-looking copies of one axis.
  struct EndPt {
    double x = 0;
    bool inf = false;
  };
  auto mob_pt = [](const Mat2& m, EndPt e) {
    if (e.inf) {
      if (std::abs(m.c) < 1e-300) return EndPt{0, true};
      return EndPt{m.a / m.c, false};
    }
    double num = m.a * e.x + m.b;
    double den = m.c * e.x + m.d;
    if (std::abs(den) <= 1e-14 * std::abs(num)) return EndPt{0, true};
    return EndPt{num / den, false};
  };
  auto geo_from = [](EndPt e1, EndPt e2) {
    Geo g;
    if (e1.inf || e2.inf) {
      g.vertical = true;
      g.x = e1.inf ? e2.x : e1.x;
      return g;
    }
    g.c = (e1.x + e2.x) / 2;
    g.rho = std::abs(e1.x - e2.x) / 2;
    return g;
  };
  // Inversive distance against the reference axis, evaluated directly in the
  // endpoint coordinates: (c-c1)^2 - rho^2 telescopes to (p-c1)(q-c1), which
  // stays accurate for distant translates where the squared terms cancel.
  auto inversive_ref = [&](EndPt e1, EndPt e2) {
    if (e1.inf || e2.inf) {
      double f = e1.inf ? e2.x : e1.x;
      if (axis_a.vertical) return 1.0;
      return std::abs(f - axis_a.c) / axis_a.rho;
    }
    if (axis_a.vertical) return std::abs(e1.x + e2.x - 2 * axis_a.x) / std::abs(e1.x - e2.x);
    double n = std::abs((e1.x - axis_a.c) * (e2.x - axis_a.c) - axis_a.rho * axis_a.rho);
    return n / (axis_a.rho * std::abs(e1.x - e2.x));
  };

  std::set<std::tuple<int, long long, long long>> seen_axes;
  auto axis_key = [&](EndPt e1, EndPt e2) {
    Geo g = geo_from(e1, e2);
    if (g.vertical) return std::make_tuple(1, round_key(g.x), 0LL);
    return std::make_tuple(0, round_key(g.c), round_key(g.rho));
  };

  std::set<std::tuple<int, long long, long long, long long, long long>> visited;
  auto node_key = [&](EndPt e1, EndPt e2, std::complex<double> mark) {
    auto ak = axis_key(e1, e2);
    return std::make_tuple(std::get<0>(ak), std::get<1>(ak), std::get<2>(ak),
                           round_key(mark.real()), round_key(mark.imag()));
  };

  bool degenerate_seen = false;
  double best_disjoint = std::numeric_limits<double>::infinity();
  std::vector<Crossing> crossings;

  // Any crossing orbit has a power-reduced lift within half a period of the
  // apex, so counting is restricted to that window (plus tolerance for an
  // orbit sitting on the boundary).  Deeper lifts repeat the same orbits with
  // degraded parameter accuracy and must not be counted.
  double t_window = la / 2 + 0.05;

  auto process = [&](EndPt e1, EndPt e2) {
    if (!e1.inf && !e2.inf && std::abs(e1.x - e2.x) < 1e-300) return;
    if (!seen_axes.insert(axis_key(e1, e2)).second) return;
    double I = inversive_ref(e1, e2);
    if (std::abs(I - 1.0) <= degenerate_tol) {
      degenerate_seen = true;
      return;
    }
    if (I > 1.0) {
      best_disjoint = std::min(best_disjoint, std::acosh(I));
      return;
    }
    Geo axis_t = geo_from(e1, e2);
    double u, v;
    if (!endpoint_images(axis_a, axis_t, u, v) || !(u * v < 0)) {
      degenerate_seen = true;  // only reachable inside the tangency band
      return;
    }
    Crossing cx;
    cx.t = 0.5 * std::log(-u * v);
    if (std::abs(cx.t) > t_window) return;
    cx.angle = std::acos(std::clamp(I, 0.0, 1.0));
    crossings.push_back(cx);
  };

  auto distinct_crossings = [&]() {
    std::vector<Crossing> cs = crossings;
    for (auto& c : cs) {
      c.t = std::fmod(c.t, la);
      if (c.t < 0) c.t += la;
    }
    std::sort(cs.begin(), cs.end(), [](const Crossing& x, const Crossing& y) { return x.t < y.t; });
    std::vector<Crossing> merged;
    for (const auto& c : cs) {
      if (!merged.empty() && c.t - merged.back().t <= param_dedup_tol)
        merged.back().angle = std::min(merged.back().angle, c.angle);
      else
        merged.push_back(c);
    }
    if (merged.size() >= 2 && (la - merged.back().t) + merged.front().t <= param_dedup_tol) {
      merged.front().angle = std::min(merged.front().angle, merged.back().angle);
      merged.pop_back();
    }
    return merged;
  };

  auto reach = [&]() {
    // Both feet of a witness configuration can be power-reduced to within a
    // half period of the marked apexes, so (la + lb) / 2 covers them.
    double d_term = crossings.empty() && std::isfinite(best_disjoint) ? best_disjoint : 0.0;
    return (la + lb) / 2 + d_term + opt.margin;
  };

  struct Node {
    EndPt e1, e2;
    std::complex<double> mark;
    std::size_t last;
    int depth;
    double delta;
  };

  EndPt b1, b2;
  if (axis_b.vertical) {
    b1 = {axis_b.x, false};
    b2 = {0, true};
  } else {
    b1 = {axis_b.c - axis_b.rho, false};
    b2 = {axis_b.c + axis_b.rho, false};
  }

  process(b1, b2);
  visited.insert(node_key(b1, b2, q0));

  bool capped = false;
  bool target_hit = opt.crossing_target > 0 &&
                    (int)distinct_crossings().size() >= opt.crossing_target;
  std::deque<Node> queue;
  queue.push_back({b1, b2, q0, (std::size_t)-1, 0, hyp_dist(p0, q0)});
  int nodes = 1;

  // Children extend the word on the left, so each step acts on the carried
  // axis and marked point by a single generator.
  while (!queue.empty() && !target_hit) {
    Node n = queue.front();
    queue.pop_front();
    if (n.depth >= opt.max_depth) {
      capped = true;
      continue;
    }
    for (std::size_t li = 0; li < 2 * ng; ++li) {
      if (n.last != (std::size_t)-1 && li == letter_inverse(n.last)) continue;
      EndPt e1 = mob_pt(letters[li], n.e1);
      EndPt e2 = mob_pt(letters[li], n.e2);
      std::complex<double> mark = moebius(letters[li], n.mark);
      if (!visited.insert(node_key(e1, e2, mark)).second) continue;
      double delta = hyp_dist(p0, mark);
      process(e1, e2);
      if (opt.crossing_target > 0 &&
          (int)distinct_crossings().size() >= opt.crossing_target) {
        target_hit = true;
        break;
      }
      // Expand within the certified reach, or while still descending
      // toward the action region.
      if (delta <= reach() + opt.slack || delta < n.delta - 0.05) {
        if (nodes >= opt.max_nodes) {
          capped = true;
          continue;
        }
        ++nodes;
        queue.push_back({e1, e2, mark, li, n.depth + 1, delta});
      }
    }
  }

  if (degenerate_seen) {
    out.verdict = PairVerdict::undetermined;
    return out;
  }

  out.certified = target_hit || !capped;

  auto merged = distinct_crossings();
  if (!merged.empty()) {
    out.verdict = PairVerdict::crossing;
    out.crossings = (int)merged.size();
    out.angle = merged.front().angle;
    for (const auto& c : merged) {
      out.angle = std::min(out.angle, c.angle);
      out.points.push_back({c.t, c.angle});
    }
    if (opt.crossing_target > 0 && out.crossings != opt.crossing_target) out.certified = false;
    return out;
  }

  if (std::isfinite(best_disjoint)) {
    out.distance = best_disjoint;
    out.verdict = out.certified ? PairVerdict::disjoint : PairVerdict::undetermined;
    return out;
  }
  out.verdict = PairVerdict::undetermined;
  return out;
}

}  // namespace ksys
