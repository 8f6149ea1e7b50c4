#pragma once

#include <cmath>

#include "ksys/util.hpp"

namespace ksys {

// Real 2x2 matrix, kept at determinant 1. Sign is not normalized: m and -m
// act identically on the upper half plane, and traces are compared by
// absolute value throughout.
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;
};

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

inline double det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
inline double trace(const Mat2& m) { return m.a + m.d; }

inline Mat2 inverse(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

inline Mat2 normalized(const Mat2& m) {
  double dt = det(m);
  if (!(dt > 0)) throw invalid_input("matrix determinant must be positive");
  double s = std::sqrt(dt);
  Mat2 r{m.a / s, m.b / s, m.c / s, m.d / s};
  if (std::abs(det(r) - 1.0) > 1e-12) throw invalid_input("determinant normalization failed");
  return r;
}

inline constexpr double trace_tol = 1e-9;

enum class IsomClass { elliptic, parabolic, hyperbolic };

inline IsomClass classify(const Mat2& m, double tol = trace_tol) {
  double t = std::abs(trace(m));
  if (t > 2 + tol) return IsomClass::hyperbolic;
  if (t < 2 - tol) return IsomClass::elliptic;
  return IsomClass::parabolic;
}

inline double translation_length(const Mat2& m) {
  if (classify(m) != IsomClass::hyperbolic)
    throw invalid_input("no closed geodesic: element is not hyperbolic");
  return 2.0 * std::acosh(std::abs(trace(m)) / 2.0);
}

}  // namespace ksys
