#include "ksys/census.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ksys/bounds.hpp"
#include "ksys/util.hpp"

namespace ksys {

double epsilon_of_L(double L) {
  if (!(L > 0)) throw invalid_input("length cutoff must be positive");
  double s2 = std::sinh(L / 2) * std::sinh(L / 2);
  double dist_branch = std::asinh(2.0 / s2);
  double angle_branch = std::asin(std::min(1.0, 1.0 / s2));
  return 0.5 * std::min(dist_branch, angle_branch);
}

double tube_volume(double length, double eps) {
  if (!(length > 0)) throw invalid_input("tube length must be positive");
  if (eps < 0) throw invalid_input("tube radius must be nonnegative");
  if (eps > std::acos(-1.0) / 2)
    throw invalid_input("volume formula only holds for radius at most pi/2");
  return 8.0 * length * (std::cosh(eps) - 1.0);
}

namespace {

struct Candidate {
  std::string canon;
  double length;
  double trace;
};

// All cyclically reduced words of length 1..R starting with the given
// letter; the visitor sees each once.
template <typename F>
void walk_words(std::size_t first, std::size_t nletters, int R, F&& visit) {
  auto inverse_of = [nletters](std::size_t li) {
    std::size_t ng = nletters / 2;
    return li < ng ? li + ng : li - ng;
  };
  std::vector<std::size_t> word{first};
  auto rec = [&](auto&& self) -> void {
    if (word.size() == 1 || word.back() != inverse_of(word.front())) visit(word);
    if ((int)word.size() == R) return;
    for (std::size_t li = 0; li < nletters; ++li) {
      if (li == inverse_of(word.back())) continue;
      word.push_back(li);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

std::string letters_to_word(const std::vector<std::size_t>& ls, std::size_t ng) {
  std::string w;
  w.reserve(ls.size());
  for (auto li : ls) w.push_back(li < ng ? (char)('a' + li) : (char)('A' + (li - ng)));
  return w;
}

// Numeric-mode conjugacy fingerprint: greedily conjugate by single letters
// to maximize the axis radius, then round the resulting ideal endpoints.
// Best effort; exactness is only available for free pi_1.
std::tuple<long long, long long> axis_fingerprint(const HyperbolicStructure& st, Mat2 m) {
  auto endpoints = [](const Mat2& g) {
    Geo ax = axis_of(g);
    if (ax.vertical) return std::make_pair(ax.x, std::numeric_limits<double>::infinity());
    return std::make_pair(ax.c - ax.rho, ax.c + ax.rho);
  };
  auto radius = [](const Mat2& g) {
    Geo ax = axis_of(g);
    return ax.vertical ? std::numeric_limits<double>::infinity() : ax.rho;
  };
  std::vector<Mat2> letters;
  for (const auto& g : st.generators) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  for (int iter = 0; iter < 200; ++iter) {
    double best = radius(m);
    if (std::isinf(best)) break;
    Mat2 next = m;
    bool improved = false;
    for (const auto& g : letters) {
      Mat2 cand = g * m * inverse(g);
      double rr = radius(cand);
      if (rr > best * (1 + 1e-12)) {
        best = rr;
        next = cand;
        improved = true;
      }
    }
    if (!improved) break;
    m = next;
  }
  auto [p, q] = endpoints(m);
  if (p > q) std::swap(p, q);
  auto key = [](double x) {
    if (std::isinf(x)) return (long long)1e18;
    return (long long)std::llround(std::clamp(x, -1e9, 1e9) * 1e6);
  };
  return {key(p), key(q)};
}

}  // namespace

CensusResult enumerate_census(const HyperbolicStructure& st, double L, int radius,
                              int threads) {
  if (radius < 1) throw invalid_input("enumeration radius must be at least 1");
  if (!(L > 0)) throw invalid_input("length cutoff must be positive");
  if (st.generators.empty()) throw invalid_input("structure has no generators");
  threads = std::clamp(threads, 1, 64);

  const std::size_t ng = st.generators.size();
  const std::size_t nletters = 2 * ng;

  auto enumerate_part = [&](std::size_t first) {
    std::vector<Candidate> found;
    std::set<std::string> seen;
    walk_words(first, nletters, radius, [&](const std::vector<std::size_t>& ls) {
      std::string w = letters_to_word(ls, ng);
      std::string canon = canonical_class_word(w);
      if (!seen.insert(canon).second) return;
      if (!primitive_word(canon)) return;
      Mat2 m = eval_word(st.generators, w);
      IsomClass cls = classify(m);
      if (cls == IsomClass::elliptic)
        throw invalid_input("structure is invalid: word " + canon + " acts elliptically");
      if (cls == IsomClass::parabolic) return;
      double len = translation_length(m);
      if (len <= L + 1e-12) found.push_back({canon, len, trace(m)});
    });
    return found;
  };

  std::vector<Candidate> all;
  if (threads <= 1 || nletters < 2) {
    for (std::size_t f = 0; f < nletters; ++f) {
      auto part = enumerate_part(f);
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<Candidate>>> futs;
    for (std::size_t f = 0; f < nletters; ++f)
      futs.push_back(std::async(std::launch::async, enumerate_part, f));
    for (auto& fu : futs) {
      auto part = fu.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }

  // Deterministic order before dedup: shortest word first, then lexicographic.
  std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
    if (x.canon.size() != y.canon.size()) return x.canon.size() < y.canon.size();
    return x.canon < y.canon;
  });

  std::vector<Candidate> classes;
  if (st.exact_words) {
    std::set<std::string> seen;
    for (const auto& c : all)
      if (seen.insert(c.canon).second) classes.push_back(c);
  } else {
    std::map<std::tuple<long long, long long>, std::size_t> by_axis;
    for (const auto& c : all) {
      auto fp = axis_fingerprint(st, eval_word(st.generators, c.canon));
      auto it = by_axis.find(fp);
      if (it == by_axis.end()) {
        by_axis.emplace(fp, classes.size());
        classes.push_back(c);
      } else if (c.length < classes[it->second].length * (1 - 1e-6)) {
        classes[it->second] = c;  // shorter rep found: earlier entry was a power
      }
    }
  }

  CensusResult out;
  out.L = L;
  out.complete_to_radius = radius;
  int count_prev = 0;
  for (const auto& c : classes)
    if ((int)c.canon.size() <= radius - 1) ++count_prev;
  int count_now = (int)classes.size();
  if (radius == 1) {
    out.stable = false;
    out.stability_note = "stability unavailable at radius 1; rerun with a larger radius";
  } else if (count_prev == count_now) {
    out.stable = true;
    out.stability_note = "counts stable from radius " + std::to_string(radius - 1) +
                         " to " + std::to_string(radius);
  } else {
    out.stable = false;
    out.stability_note = "counts still changing from radius " + std::to_string(radius - 1) +
                         " (" + std::to_string(count_prev) + ") to " +
                         std::to_string(radius) + " (" + std::to_string(count_now) +
                         "); increase radius";
  }
  if (!st.exact_words) out.stability_note += " [numeric dedup]";

  for (const auto& c : classes) out.classes.push_back({c.canon, c.length, c.trace, true});
  std::sort(out.classes.begin(), out.classes.end(),
            [](const GeodesicClass& x, const GeodesicClass& y) {
              if (x.length != y.length) return x.length < y.length;
              return x.word < y.word;
            });
  return out;
}

GilmanReport verify_gilman(const CensusResult& census, const HyperbolicStructure& st) {
  if (census.classes.empty()) throw invalid_input("census is empty");
  GilmanReport rep;
  rep.epsilon = epsilon_of_L(census.L);
  double s2 = std::sinh(census.L / 2) * std::sinh(census.L / 2);
  double dist_level = std::asinh(2.0 / s2);
  double angle_level = std::asin(std::min(1.0, 1.0 / s2));

  const bool torus = st.sig.genus == 1 && st.sig.punctures == 1 && st.exact_words;
  std::vector<bool> simple(census.classes.size(), false);
  std::vector<std::pair<long long, long long>> slope(census.classes.size());
  if (torus) {
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
      long long p, q;
      if (simple_torus_word(census.classes[i].word, p, q)) {
        simple[i] = true;
        slope[i] = {p, q};
      }
    }
  }

  bool all_ok = true;
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < census.classes.size(); ++j) {
      PairOptions opt;
      if (torus && simple[i] && simple[j]) {
        long long det = slope[i].first * slope[j].second - slope[i].second * slope[j].first;
        if (det != 0) opt.crossing_target = (int)std::abs(det);
      }
      PairGeometry pg = pair_geometry(st, census.classes[i].word, census.classes[j].word, opt);
      PairRecord rec;
      rec.i = (int)i;
      rec.j = (int)j;
      rec.wi = census.classes[i].word;
      rec.wj = census.classes[j].word;
      rec.verdict = pg.verdict;
      if (pg.verdict == PairVerdict::identical)
        throw invariant_violation("census contains conjugate classes");
      if (!pg.certified || pg.verdict == PairVerdict::undetermined) {
        rep.undetermined.push_back(rec);
        continue;
      }
      rec.margin = pg.verdict == PairVerdict::crossing ? pg.angle - angle_level
                                                       : pg.distance - dist_level;
      if (rec.margin < -1e-9) all_ok = false;
      rep.pairs.push_back(rec);
    }
  }
  rep.pass = all_ok && rep.undetermined.empty();
  return rep;
}

Thm13Report check_thm13(const CensusResult& census, const HyperbolicStructure& st) {
  if (!census.stable)
    throw invalid_input("census counts are not stable: " + census.stability_note);
  Thm13Report rep;
  rep.count = census.count();
  rep.bound = bound_geodesic_count(st.sig.abs_chi(), census.L);
  rep.count_ok = rep.count <= rep.bound + 1e-9;

  double eps = epsilon_of_L(census.L);
  rep.volume_sum = 0;
  for (const auto& c : census.classes) rep.volume_sum += tube_volume(c.length, eps);
  double pi = std::acos(-1.0);
  rep.volume_budget = 4 * pi * pi * st.sig.abs_chi();
  rep.volume_ok = rep.volume_sum <= rep.volume_budget + 1e-9;

  std::vector<int> short_idx;
  for (std::size_t i = 0; i < census.classes.size(); ++i)
    if (census.classes[i].length < margulis_mu) short_idx.push_back((int)i);
  rep.short_classes = (int)short_idx.size();
  rep.short_disjoint_ok = true;
  for (std::size_t a = 0; a < short_idx.size(); ++a) {
    for (std::size_t b = a + 1; b < short_idx.size(); ++b) {
      ++rep.short_pairs;
      PairGeometry pg = pair_geometry(st, census.classes[short_idx[a]].word,
                                      census.classes[short_idx[b]].word);
      if (pg.verdict != PairVerdict::disjoint || !pg.certified) rep.short_disjoint_ok = false;
    }
  }
  rep.pass = rep.count_ok && rep.volume_ok && rep.short_disjoint_ok;
  return rep;
}

std::string christoffel_word(long long p, long long q) {
  if (p < 0 || (p == 0 && q < 0)) throw invalid_input("slope must be in canonical form");
  if (std::gcd(std::abs(p), std::abs(q)) != 1) throw invalid_input("slope must be coprime");
  if (p == 0) return "b";
  if (q == 0) return "a";
  char bletter = q > 0 ? 'b' : 'B';
  long long qq = std::abs(q), n = p + qq;
  std::string w;
  for (long long k = 0; k < n; ++k)
    w.push_back((k + 1) * qq / n - k * qq / n == 0 ? 'a' : bletter);
  return w;
}

bool simple_torus_word(const std::string& w, long long& p, long long& q) {
  long long pp = 0, qq = 0;
  for (char ch : w) {
    if (ch == 'a') ++pp;
    else if (ch == 'A') --pp;
    else if (ch == 'b') ++qq;
    else if (ch == 'B') --qq;
    else throw invalid_input("word letters must name the two torus generators");
  }
  if (pp == 0 && qq == 0) return false;
  if (std::gcd(std::abs(pp), std::abs(qq)) != 1) return false;
  if (pp < 0 || (pp == 0 && qq < 0)) {
    pp = -pp;
    qq = -qq;
  }
  if (canonical_class_word(w) != canonical_class_word(christoffel_word(pp, qq))) return false;
  p = pp;
  q = qq;
  return true;
}

}  // namespace ksys
