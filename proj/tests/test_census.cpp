#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ksys/bounds.hpp"
#include "ksys/census.hpp"
#include "ksys/util.hpp"

using namespace ksys;

// ---- independent oracle: enumerate reduced words, dedup by a freshly
// implemented cyclic+inverse key, evaluate 2x2 products directly ----

namespace {

char o_invch(char c) {
  return std::isupper((unsigned char)c) ? (char)std::tolower((unsigned char)c)
                                        : (char)std::toupper((unsigned char)c);
}

std::string o_cyc_reduce(const std::string& w) {
  std::string s;
  for (char c : w) {
    if (!s.empty() && s.back() == o_invch(c))
      s.pop_back();
    else
      s.push_back(c);
  }
  while (s.size() >= 2 && s.front() == o_invch(s.back())) s = s.substr(1, s.size() - 2);
  return s;
}

std::string o_key(const std::string& w) {
  std::string c = o_cyc_reduce(w);
  std::string inv;
  for (auto it = c.rbegin(); it != c.rend(); ++it) inv.push_back(o_invch(*it));
  std::string best;
  for (const std::string& v : {c, inv})
    for (std::size_t r = 0; r < v.size(); ++r) {
      std::string rot = v.substr(r) + v.substr(0, r);
      if (best.empty() || rot < best) best = rot;
    }
  return best;
}

bool o_primitive(const std::string& w) {
  std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

struct OMat {
  double a, b, c, d;
};

OMat o_mul(const OMat& x, const OMat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

// class key -> (length, |trace|)
std::map<std::string, std::pair<double, double>> oracle_census(const HyperbolicStructure& st,
                                                               double L, int R) {
  std::vector<OMat> gen, geninv;
  for (const auto& g : st.generators) {
    gen.push_back({g.a, g.b, g.c, g.d});
    geninv.push_back({g.d, -g.b, -g.c, g.a});
  }
  std::map<std::string, std::pair<double, double>> out;
  std::vector<char> letters;
  for (std::size_t i = 0; i < gen.size(); ++i) {
    letters.push_back((char)('a' + i));
    letters.push_back((char)('A' + i));
  }
  std::string w;
  auto rec = [&](auto&& self) -> void {
    if (!w.empty()) {
      std::string key = o_key(w);
      if (!key.empty() && o_primitive(key) && !out.count(key)) {
        OMat m{1, 0, 0, 1};
        for (char ch : key) {
          std::size_t idx = (std::size_t)(std::tolower((unsigned char)ch) - 'a');
          m = o_mul(m, std::isupper((unsigned char)ch) ? geninv[idx] : gen[idx]);
        }
        double tr = std::abs(m.a + m.d);
        REQUIRE(tr > 2.0 - 1e-9);  // no elliptic elements on these structures
        if (tr > 2.0 + 1e-9) {
          double len = 2.0 * std::acosh(tr / 2.0);
          if (len <= L + 1e-12) out[key] = {len, tr};
        }
      }
    }
    if ((int)w.size() == R) return;
    for (char c : letters) {
      if (!w.empty() && w.back() == o_invch(c)) continue;
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

TEST_CASE("tube radius function") {
  double L0 = 2.0 * std::asinh(1.0);
  CHECK(epsilon_of_L(L0) == doctest::Approx(0.5 * std::asinh(2.0)).epsilon(1e-12));
  CHECK(epsilon_of_L(L0) == doctest::Approx(0.72182).epsilon(1e-4));

  double s2 = std::sinh(1.5) * std::sinh(1.5);
  CHECK(epsilon_of_L(3.0) == doctest::Approx(0.5 * std::asin(1.0 / s2)).epsilon(1e-12));
  for (double L : {1.77, 2.0, 2.5, 3.0, 4.0, 6.0}) CHECK(epsilon_of_L(L) >= std::exp(-L));

  // Short cutoffs saturate the clamped angle branch.
  CHECK(epsilon_of_L(0.5) == doctest::Approx(std::acos(-1.0) / 4).epsilon(1e-12));
  CHECK_THROWS_AS(epsilon_of_L(0.0), invalid_input);
}

TEST_CASE("tube volume") {
  CHECK(tube_volume(1, 1) == doctest::Approx(8 * (std::cosh(1.0) - 1)).epsilon(1e-12));
  CHECK(tube_volume(1, 1) == doctest::Approx(4.3446451).epsilon(1e-7));
  CHECK(tube_volume(2, 0) == doctest::Approx(0.0));
  CHECK_NOTHROW(tube_volume(1, std::acos(-1.0) / 2));
  CHECK_THROWS_AS(tube_volume(1, 2), invalid_input);
  CHECK_THROWS_AS(tube_volume(1, -0.1), invalid_input);
  CHECK_THROWS_AS(tube_volume(0, 1), invalid_input);
}

TEST_CASE("christoffel words and simple classes") {
  CHECK(christoffel_word(1, 0) == "a");
  CHECK(christoffel_word(0, 1) == "b");
  CHECK(christoffel_word(1, 1) == "ab");
  CHECK(christoffel_word(2, 1) == "aab");
  CHECK(christoffel_word(3, 2) == "aabab");
  CHECK(christoffel_word(1, -1) == "aB");
  CHECK(christoffel_word(2, -1) == "aaB");
  CHECK_THROWS_AS(christoffel_word(-1, 2), invalid_input);
  CHECK_THROWS_AS(christoffel_word(2, 4), invalid_input);

  long long p, q;
  CHECK(simple_torus_word("ab", p, q));
  CHECK(p == 1);
  CHECK(q == 1);
  CHECK(simple_torus_word("BA", p, q));  // inverse class, same slope
  CHECK(p == 1);
  CHECK(q == 1);
  CHECK(simple_torus_word("aba", p, q));  // conjugate rotation of aab
  CHECK(p == 2);
  CHECK(q == 1);
  CHECK_FALSE(simple_torus_word("abAB", p, q));
  CHECK_FALSE(simple_torus_word("aabb", p, q));
  CHECK_FALSE(simple_torus_word("aaBab", p, q));
}

TEST_CASE("modular census at L=2") {
  auto st = preset_structure("modular");
  auto cen = enumerate_census(st, 2.0, 6);
  REQUIRE(cen.count() == 3);
  double want = 2.0 * std::acosh(1.5);
  std::set<std::string> words;
  for (const auto& c : cen.classes) {
    CHECK(c.length == doctest::Approx(want).epsilon(1e-9));
    CHECK(std::abs(c.trace) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(c.primitive);
    words.insert(c.word);
  }
  std::set<std::string> expect{canonical_class_word("a"), canonical_class_word("b"),
                               canonical_class_word("ab")};
  CHECK(words == expect);
  CHECK(cen.stable);
}

TEST_CASE("census radius and cutoff edge cases") {
  auto st = preset_structure("modular");
  auto below = enumerate_census(st, 1.0, 6);
  CHECK(below.count() == 0);
  CHECK(below.stable);

  auto r1 = enumerate_census(st, 2.0, 1);
  CHECK(r1.count() == 2);  // the two generator classes, ab not yet reachable
  CHECK_FALSE(r1.stable);
  CHECK(r1.stability_note.find("radius 1") != std::string::npos);

  auto r2 = enumerate_census(st, 2.0, 2);
  CHECK(r2.count() == 3);
  CHECK_FALSE(r2.stable);  // counts moved between radius 1 and 2

  auto r3 = enumerate_census(st, 2.0, 3);
  CHECK(r3.count() == 3);
  CHECK(r3.stable);

  CHECK_THROWS_AS(enumerate_census(st, 2.0, 0), invalid_input);
  CHECK_THROWS_AS(enumerate_census(st, -1.0, 6), invalid_input);
}

TEST_CASE("preset censuses at L=4 match the oracle") {
  struct Expect {
    const char* name;
    int count;
  };
  for (Expect e : {Expect{"modular", 6}, Expect{"torus-3-4", 4}, Expect{"s04-pinched", 7},
                   Expect{"t1h-pinched", 8}}) {
    CAPTURE(e.name);
    auto st = preset_structure(e.name);
    auto cen = enumerate_census(st, 4.0, 6);
    CHECK(cen.count() == e.count);
    CHECK(cen.stable);

    auto oracle = oracle_census(st, 4.0, 6);
    REQUIRE(oracle.size() == (std::size_t)cen.count());
    double prev = 0;
    std::set<std::string> seen;
    for (const auto& c : cen.classes) {
      CHECK(c.length > 0);
      CHECK(c.length <= 4.0 + 1e-12);
      CHECK(c.length >= prev);  // sorted
      prev = c.length;
      CHECK(seen.insert(c.word).second);  // no duplicates
      REQUIRE(oracle.count(c.word) == 1);
      CHECK(c.length == doctest::Approx(oracle[c.word].first).epsilon(1e-9));
      CHECK(std::abs(c.trace) == doctest::Approx(oracle[c.word].second).epsilon(1e-9));
    }
  }
}

TEST_CASE("pinched census lengths agree with the construction") {
  double r = 1.2;
  auto t1h = enumerate_census(preset_structure("t1h-pinched"), 4.0, 6);
  REQUIRE(t1h.count() == 8);
  double c = std::cosh(r / 2) / std::sinh(r / 2);
  std::vector<double> want{r,
                           2 * std::asinh(1 / std::sinh(r / 2)),
                           2 * std::acosh(c * std::cosh(r / 2)),
                           2 * std::acosh(c * std::cosh(r / 2)),
                           2 * std::acosh(c * std::cosh(r)),
                           2 * std::acosh(c * std::cosh(r))};
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(t1h.classes[i].length == doctest::Approx(want[i]).epsilon(1e-6));

  auto s04 = enumerate_census(preset_structure("s04-pinched"), 4.0, 6);
  REQUIRE(s04.count() == 7);
  double s = 2 * std::cosh(r / 4);
  CHECK(s04.classes[0].word == "AB");
  CHECK(s04.classes[0].length == doctest::Approx(r).epsilon(1e-9));
  // One figure-eight around two cusps per side, then the four classes that
  // wind a cusp twice; trace values 2+s^2 and 2s^2-2.
  for (int i : {1, 2})
    CHECK(s04.classes[i].length ==
          doctest::Approx(2 * std::acosh((2 + s * s) / 2)).epsilon(1e-9));
  for (int i : {3, 4, 5, 6})
    CHECK(s04.classes[i].length ==
          doctest::Approx(2 * std::acosh((2 * s * s - 2) / 2)).epsilon(1e-9));
}

TEST_CASE("enumeration is thread-count independent") {
  auto st = preset_structure("s04-pinched");
  auto one = enumerate_census(st, 4.0, 6, 1);
  auto four = enumerate_census(st, 4.0, 6, 4);
  REQUIRE(one.count() == four.count());
  for (int i = 0; i < one.count(); ++i) {
    CHECK(one.classes[i].word == four.classes[i].word);
    CHECK(one.classes[i].length == four.classes[i].length);
  }
  CHECK(one.stability_note == four.stability_note);
}

TEST_CASE("numeric fingerprint dedup reproduces the exact census") {
  auto st = preset_structure("modular");
  st.exact_words = false;  // force the matrix-list fallback path
  auto cen = enumerate_census(st, 4.0, 6);
  auto exact = enumerate_census(preset_structure("modular"), 4.0, 6);
  REQUIRE(cen.count() == exact.count());
  for (int i = 0; i < cen.count(); ++i) {
    CHECK(cen.classes[i].word == exact.classes[i].word);
    CHECK(cen.classes[i].length == doctest::Approx(exact.classes[i].length).epsilon(1e-12));
  }
  CHECK(cen.stability_note.find("numeric") != std::string::npos);
}

TEST_CASE("gilman dichotomy report on the modular census") {
  auto st = preset_structure("modular");
  auto cen = enumerate_census(st, 2.0, 6);
  auto rep = verify_gilman(cen, st);
  CHECK(rep.pass);
  CHECK(rep.undetermined.empty());
  REQUIRE(rep.pairs.size() == 3);
  CHECK(rep.epsilon == doctest::Approx(epsilon_of_L(2.0)));
  double s2 = std::sinh(1.0) * std::sinh(1.0);
  double want_margin = std::acos(0.6) - std::asin(1.0 / s2);
  for (const auto& p : rep.pairs) {
    CHECK(p.verdict == PairVerdict::crossing);
    CHECK(p.margin == doctest::Approx(want_margin).epsilon(1e-6));
    CHECK(p.margin > 0);
  }
}

TEST_CASE("gilman dichotomy across all presets at L=4") {
  for (const char* name : {"modular", "torus-3-4", "s04-pinched", "t1h-pinched"}) {
    CAPTURE(name);
    auto st = preset_structure(name);
    auto cen = enumerate_census(st, 4.0, 6);
    auto rep = verify_gilman(cen, st);
    CHECK(rep.pass);
    CHECK(rep.undetermined.empty());
    CHECK(rep.pairs.size() == (std::size_t)(cen.count() * (cen.count() - 1) / 2));
    for (const auto& p : rep.pairs) CHECK(p.margin >= -1e-9);
  }
}

TEST_CASE("gilman failure is detected, not smoothed over") {
  auto st = preset_structure("modular");
  auto cen = enumerate_census(st, 2.0, 6);
  cen.L = 0.5;  // classes are now far longer than the claimed cutoff
  auto rep = verify_gilman(cen, st);
  CHECK_FALSE(rep.pass);
  bool negative = false;
  for (const auto& p : rep.pairs) negative = negative || p.margin < -1e-9;
  CHECK(negative);

  CensusResult empty;
  CHECK_THROWS_AS(verify_gilman(empty, st), invalid_input);
}

TEST_CASE("single-class census passes vacuously and partitions at mu") {
  auto st = build_one_holed(0.05, 0);
  auto cen = enumerate_census(st, 1.0, 4);
  REQUIRE(cen.count() == 1);
  CHECK(cen.classes[0].length == doctest::Approx(0.05).epsilon(1e-9));
  auto rep = verify_gilman(cen, st);
  CHECK(rep.pass);
  CHECK(rep.pairs.empty());

  auto thm = check_thm13(cen, st);
  CHECK(thm.short_classes == 1);
  CHECK(thm.short_pairs == 0);
  CHECK(thm.short_disjoint_ok);
  CHECK(thm.pass);
}

TEST_CASE("count and volume bound checks") {
  auto st = preset_structure("modular");
  auto cen = enumerate_census(st, 2.0, 6);
  auto thm = check_thm13(cen, st);
  double pi = std::acos(-1.0);
  double want_bound = 1.5 + (pi * pi / 0.2629) * std::exp(4.0);
  CHECK(thm.bound == doctest::Approx(want_bound).epsilon(1e-12));
  CHECK(thm.count == 3);
  CHECK(thm.count_ok);
  double eps = epsilon_of_L(2.0);
  double want_vol = 3 * 8 * (2 * std::acosh(1.5)) * (std::cosh(eps) - 1);
  CHECK(thm.volume_sum == doctest::Approx(want_vol).epsilon(1e-9));
  CHECK(thm.volume_budget == doctest::Approx(4 * pi * pi).epsilon(1e-12));
  CHECK(thm.volume_ok);
  CHECK(thm.short_classes == 0);
  CHECK(thm.pass);

  auto empty = enumerate_census(st, 1.0, 6);
  auto thm_empty = check_thm13(empty, st);
  CHECK(thm_empty.count == 0);
  CHECK(thm_empty.pass);

  auto unstable = enumerate_census(st, 2.0, 1);
  CHECK_THROWS_AS(check_thm13(unstable, st), invalid_input);
}

TEST_CASE("thm13 across all presets at L=4") {
  for (const char* name : {"modular", "torus-3-4", "s04-pinched", "t1h-pinched"}) {
    CAPTURE(name);
    auto st = preset_structure(name);
    auto cen = enumerate_census(st, 4.0, 6);
    auto thm = check_thm13(cen, st);
    CHECK(thm.pass);
    CHECK(thm.count_ok);
    CHECK(thm.volume_ok);
    CHECK(thm.short_disjoint_ok);
  }
}
