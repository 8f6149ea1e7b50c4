#include "ksys/fuchsian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ksys/util.hpp"

namespace ksys {

char inverse_letter(char ch) {
  if (ch >= 'a' && ch <= 'z') return (char)(ch - 'a' + 'A');
  if (ch >= 'A' && ch <= 'Z') return (char)(ch - 'A' + 'a');
  throw invalid_input("word letters must be a-z or A-Z");
}

std::string inverse_word(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

std::string reduce_word(const std::string& w) {
  std::string out;
  for (char ch : w) {
    if (!out.empty() && out.back() == inverse_letter(ch))
      out.pop_back();
    else
      out.push_back(ch);
  }
  return out;
}

std::string cyclic_reduce(const std::string& w) {
  std::string r = reduce_word(w);
  while (r.size() >= 2 && r.front() == inverse_letter(r.back())) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

bool is_cyclically_reduced(const std::string& w) { return cyclic_reduce(w) == reduce_word(w); }

std::string canonical_class_word(const std::string& w) {
  std::string r = cyclic_reduce(w);
  if (r.empty()) return r;
  std::string best;
  auto consider = [&best](const std::string& s) {
    std::string rot = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (best.empty() || rot < best) best = rot;
    }
  };
  consider(r);
  consider(inverse_word(r));
  return best;
}

bool primitive_word(const std::string& w) {
  std::string r = cyclic_reduce(w);
  std::size_t n = r.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool period = true;
    for (std::size_t i = 0; i < n && period; ++i) period = r[i] == r[(i + d) % n];
    if (period) return false;
  }
  return true;
}

Mat2 eval_word(const std::vector<Mat2>& gens, const std::string& w) {
  Mat2 m;
  for (char ch : w) {
    bool upper = ch >= 'A' && ch <= 'Z';
    if (!upper && (ch < 'a' || ch > 'z'))
      throw invalid_input("word letters must be a-z or A-Z");
    std::size_t idx = upper ? (std::size_t)(ch - 'A') : (std::size_t)(ch - 'a');
    if (idx >= gens.size()) throw invalid_input("word uses an undefined generator");
    m = m * (upper ? inverse(gens[idx]) : gens[idx]);
  }
  return m;
}

namespace {

bool same_projective(const Mat2& x, const Mat2& y, double tol) {
  double dplus = std::max(std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)),
                          std::max(std::abs(x.c - y.c), std::abs(x.d - y.d)));
  double dminus = std::max(std::max(std::abs(x.a + y.a), std::abs(x.b + y.b)),
                           std::max(std::abs(x.c + y.c), std::abs(x.d + y.d)));
  return std::min(dplus, dminus) <= tol;
}

void check_cusps(const HyperbolicStructure& st, bool internal) {
  for (const auto& w : st.cusp_words) {
    Mat2 m = eval_word(st.generators, w);
    // Cusp words from pinched constructions have entries of size 1/r^2 or
    // worse, so the parabolicity tolerance must track the matrix scale.
    double scale = std::max({1.0, std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    if (classify(m, trace_tol * scale) != IsomClass::parabolic) {
      if (internal) throw invariant_violation("construction produced a non-parabolic cusp word");
      throw invalid_input("cusp word not parabolic: " + w);
    }
  }
}

}  // namespace

HyperbolicStructure build_trace_torus(double x, double y) {
  if (!(x > 2.0) || !(y > 2.0)) throw invalid_input("trace coordinates must both exceed 2");
  double disc = x * x * y * y - 4 * x * x - 4 * y * y;
  if (disc < 0) throw invalid_input("trace coordinates have no real third trace");
  double z = (x * y - std::sqrt(disc)) / 2.0;
  double zeta = (z + std::sqrt(z * z - 4.0)) / 2.0;

  HyperbolicStructure st;
  st.sig = {1, 1};
  st.construction = "trace";
  st.generators = {Mat2{x, -1, 1, 0}, Mat2{0, zeta, -1.0 / zeta, y}};
  st.cusp_words = {"abAB"};
  check_cusps(st, true);
  return st;
}

HyperbolicStructure build_from_matrices(const SurfaceSig& sig, const std::vector<Mat2>& gens,
                                        const std::vector<std::string>& cusp_words) {
  if (!sig.hyperbolic_admissible()) throw invalid_input("signature is not hyperbolic-admissible");
  if (gens.empty()) throw invalid_input("generator list is empty");
  HyperbolicStructure st;
  st.sig = sig;
  st.construction = "matrices";
  for (const auto& m : gens) st.generators.push_back(normalized(m));
  st.cusp_words = cusp_words;
  st.exact_words = sig.punctures >= 1;
  check_cusps(st, false);
  return st;
}

namespace {

void check_cuff(double r) {
  if (!(r > 0)) throw invalid_input("cuff length must be positive");
  if (r > 8) throw invalid_input("cuff too long to pinch");
}

Mat2 twist_along(double z_plus, double z_minus, double tau) {
  double n = std::sqrt(z_plus - z_minus);
  Mat2 V{z_plus / n, z_minus / n, 1 / n, 1 / n};
  Mat2 D{std::exp(tau / 2), 0, 0, std::exp(-tau / 2)};
  return V * D * inverse(V);
}

}  // namespace

HyperbolicStructure build_one_holed(double r, double tau) {
  check_cuff(r);
  double rho = r / 2;
  double c = std::cosh(rho) / std::sinh(rho);
  double sb = 1.0 / std::sinh(rho);
  Mat2 A{std::exp(rho), 0, 0, std::exp(-rho)};
  Mat2 B0{c, sb, sb, c};
  Mat2 T{std::exp(tau / 2), 0, 0, std::exp(-tau / 2)};

  HyperbolicStructure st;
  st.sig = {1, 1};
  st.construction = "pants";
  st.generators = {A, T * B0};
  st.cusp_words = {"abAB"};
  check_cusps(st, true);
  return st;
}

FourHoledData build_four_holed_data(double r, double tau) {
  check_cuff(r);
  double s = 2 * std::cosh(r / 4);
  Mat2 P1{1, s, 0, 1};
  Mat2 P2{1, 0, -s, 1};
  // sqrt(s^2 - 4) and the axis endpoints cancel catastrophically for short
  // cuffs; the closed forms stay fully accurate down to r ~ 1e-3.
  double root = 2 * std::sinh(r / 4);
  double z_plus = std::exp(r / 4), z_minus = std::exp(-r / 4);

  // Half-turn about the foot of the perpendicular from the cusp at 0 to the
  // axis of (P1 P2); it conjugates the cuff holonomy to its inverse.
  double u = s / (2 * std::cosh(r / 2));
  double v = root / (2 * std::cosh(r / 2));
  Mat2 R{u / v, -(u * u + v * v) / v, 1 / v, -u / v};
  Mat2 T = twist_along(z_plus, z_minus, tau);

  Mat2 Q1 = T * R * P1 * inverse(R) * inverse(T);
  Mat2 Q2 = T * R * P2 * inverse(R) * inverse(T);

  FourHoledData data;
  data.s = s;
  data.Q2 = Q2;
  data.st.sig = {0, 4};
  data.st.construction = "pants";
  data.st.generators = {P1, P2, Q1};
  data.st.cusp_words = {"a", "b", "c", "CBA"};

  // Entries of Q2 grow like 1/r^2, so the consistency tolerance is relative.
  double scale = std::max({1.0, std::abs(Q2.a), std::abs(Q2.b), std::abs(Q2.c), std::abs(Q2.d)});
  if (!same_projective(Q2, eval_word(data.st.generators, "CBA"), 1e-9 * scale))
    throw invariant_violation("half-turn gluing is inconsistent");
  check_cusps(data.st, true);
  return data;
}

HyperbolicStructure build_four_holed(double r, double tau) {
  return build_four_holed_data(r, tau).st;
}

HyperbolicStructure preset_structure(const std::string& name) {
  if (name == "modular")
    return build_from_matrices({1, 1}, {Mat2{1, 1, 1, 2}, Mat2{1, -1, -1, 2}}, {"abAB"});
  if (name == "torus-3-4") return build_trace_torus(3, 4);
  if (name == "s04-pinched") return build_four_holed(1.2, 0);
  if (name == "t1h-pinched") return build_one_holed(1.2, 0);
  throw invalid_input("unknown preset: " + name);
}

}  // namespace ksys
