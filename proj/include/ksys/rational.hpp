#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ksys/util.hpp"

namespace ksys {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double rat_d(const Rat& r) { return r.convert_to<double>(); }

// Serialized as "num/den" (den omitted when 1), parsed back exactly.
std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

inline BigInt rat_floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

struct Vec2 {
  Rat x, y;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }

  Rat cross(const Vec2& o) const { return x * o.y - y * o.x; }
  Rat dot(const Vec2& o) const { return x * o.x + y * o.y; }
  Rat norm2() const { return x * x + y * y; }
};

// Strict total order for deterministic keying; not a geometric order.
inline bool vec2_less(const Vec2& a, const Vec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace ksys
