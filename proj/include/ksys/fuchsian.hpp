#pragma once

#include <string>
#include <vector>

#include "ksys/mat2.hpp"
#include "ksys/surface.hpp"

namespace ksys {

// Generator words: 'a'..'z' are generators, 'A'..'Z' their inverses.
char inverse_letter(char ch);
std::string inverse_word(const std::string& w);
std::string reduce_word(const std::string& w);
std::string cyclic_reduce(const std::string& w);
bool is_cyclically_reduced(const std::string& w);

// Conjugacy-class key: lexicographic minimum over all rotations of the
// cyclically reduced word and of its inverse. Classes are unoriented.
std::string canonical_class_word(const std::string& w);

// Not a proper power as a cyclic word.
bool primitive_word(const std::string& w);

Mat2 eval_word(const std::vector<Mat2>& gens, const std::string& w);

struct HyperbolicStructure {
  SurfaceSig sig;
  std::vector<Mat2> generators;
  std::string construction;  // "trace" | "pants" | "matrices"
  std::vector<std::string> cusp_words;
  // Word arithmetic is exact only when pi_1 is free (n >= 1); closed-surface
  // matrix lists fall back to numeric deduplication downstream.
  bool exact_words = true;
};

// Once-punctured torus from trace coordinates (x, y), both > 2. The third
// trace is the smaller root of z^2 - xyz + x^2 + y^2 = 0; a negative
// discriminant is rejected.
HyperbolicStructure build_trace_torus(double x, double y);

HyperbolicStructure build_from_matrices(const SurfaceSig& sig, const std::vector<Mat2>& gens,
                                        const std::vector<std::string>& cusp_words);

// Four-holed sphere: two (cusp, cusp, r) pants glued along the r-cuff by a
// half-turn, with twist tau along it. Generators a=P1, b=P2, c=Q1; the fourth
// cusp is the word CBA. The interior cuff alpha is the word "ab".
HyperbolicStructure build_four_holed(double r, double tau);

// One-holed (cusped) torus with a pinched handle curve alpha = "a" of length
// r and the symmetric crossing curve b, twisted by tau along alpha.
HyperbolicStructure build_one_holed(double r, double tau);

// Glued-matrix data exposed for consistency checks.
struct FourHoledData {
  HyperbolicStructure st;
  Mat2 Q2;   // equals eval("CBA") when the half-turn gluing is consistent
  double s;  // 2 cosh(r/4)
};
FourHoledData build_four_holed_data(double r, double tau);

// Named structures: modular | torus-3-4 | s04-pinched | t1h-pinched.
HyperbolicStructure preset_structure(const std::string& name);

}  // namespace ksys
