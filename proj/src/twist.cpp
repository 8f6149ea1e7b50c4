#include "ksys/twist.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <vector>

#include "ksys/util.hpp"

namespace ksys {

namespace {

constexpr double calibration_r = 0.05;
constexpr int calibration_n = 200;
// Longest cuff the growth experiment will pinch. When the calibrated offset
// would push r(L) past this, the count-maximizing offset 1 + c0/k is used
// instead; in the model regime the fitted slope does not depend on the
// offset, only the counts' overall scale does.
constexpr double growth_r_cap = 6.0;

Mat2 mat_pow(Mat2 a, int n) {
  Mat2 out{};
  while (n > 0) {
    if (n & 1) out = out * a;
    a = a * a;
    n >>= 1;
  }
  return out;
}

// Binary powers keep member n independent of how the range is split, so
// results do not depend on the thread count.
Mat2 member(const Mat2& B, const Mat2& A, int n) { return B * mat_pow(A, n); }

double member_length(const TwistFamily& tf, const Mat2& B, const Mat2& A, int n) {
  Mat2 m = member(B, A, n);
  if (classify(m) != IsomClass::hyperbolic)
    throw invariant_violation("twisted word " + family_word(tf, n) +
                              " is not hyperbolic");
  return translation_length(m);
}

}  // namespace

TwistFamily make_twist_family(const std::string& kind, double r) {
  TwistFamily tf;
  tf.kind = kind;
  tf.r = r;
  if (kind == "four-holed") {
    tf.st = build_four_holed(r, 0);
    tf.alpha = "ab";
    tf.beta = "abcB";
    tf.seed_crossings = 2;
    tf.log_coeff = 4;
  } else if (kind == "one-holed-torus") {
    tf.st = build_one_holed(r, 0);
    tf.alpha = "a";
    tf.beta = "b";
    tf.seed_crossings = 1;
    tf.log_coeff = 2;
  } else {
    throw invalid_input("unknown twist family kind: " + kind);
  }
  double measured = translation_length(eval_word(tf.st.generators, tf.alpha));
  if (std::abs(measured - r) > 1e-6)
    throw invariant_violation("marked cuff length drifted from the request");
  return tf;
}

TwistFamily build_pinched(const std::string& kind, double r) {
  if (!(r > 0 && r < 0.1))
    throw invalid_input("pinched family requires 0 < r < 0.1");
  return make_twist_family(kind, r);
}

std::string family_word(const TwistFamily& tf, int n) {
  if (n < 0) throw invalid_input("family index must be nonnegative");
  std::string w = tf.beta;
  for (int i = 0; i < n; ++i) w += tf.alpha;
  return w;
}

FamilyLengths family_lengths(const TwistFamily& tf, int n_max, int threads) {
  if (n_max < 1) throw invalid_input("family needs n_max >= 1");
  threads = std::clamp(threads, 1, 64);

  Mat2 A = eval_word(tf.st.generators, tf.alpha);
  Mat2 B = eval_word(tf.st.generators, tf.beta);

  FamilyLengths out;
  out.lengths.assign(n_max + 1, 0.0);

  auto fill = [&](int lo, int hi) {
    for (int n = lo; n < hi; ++n) out.lengths[n] = member_length(tf, B, A, n);
  };
  if (threads <= 1 || n_max < 8) {
    fill(0, n_max + 1);
  } else {
    std::vector<std::future<void>> futs;
    int chunk = (n_max + threads) / threads;
    for (int lo = 0; lo <= n_max; lo += chunk)
      futs.push_back(std::async(std::launch::async, fill, lo,
                                std::min(lo + chunk, n_max + 1)));
    for (auto& f : futs) f.get();
  }

  // The words beta alpha^n are reduced as written, so primitivity and
  // distinctness are word-level checks.
  for (int n = 0; n <= n_max; ++n) {
    if (!primitive_word(canonical_class_word(family_word(tf, n))))
      throw invariant_violation("family member is a proper power");
  }
  for (int n = 2; n <= n_max; ++n) {
    if (!(out.lengths[n] > out.lengths[n - 1]))
      throw invariant_violation("family lengths fail to increase");
  }

  double collar = tf.log_coeff * std::log(1 / tf.r);
  if (out.lengths[0] < collar - 1e-9)
    throw invariant_violation("seed is shorter than the collar bound");

  out.c0 = -1e300;
  for (int n = 0; n <= n_max; ++n)
    out.c0 = std::max(out.c0, out.lengths[n] - n * tf.r - collar);
  return out;
}

GrowthFit growth_fit(const std::string& kind, const std::vector<double>& Ls,
                     int threads) {
  if (Ls.size() < 5)
    throw invalid_input("growth fit needs at least 5 sample lengths");
  auto [lo_it, hi_it] = std::minmax_element(Ls.begin(), Ls.end());
  if (*hi_it - *lo_it < 3 - 1e-12)
    throw invalid_input("growth fit needs a length range spanning at least 3");
  double k = 0;
  if (kind == "four-holed") k = 4;
  else if (kind == "one-holed-torus") k = 2;
  else throw invalid_input("unknown twist family kind: " + kind);

  TwistFamily cal = build_pinched(kind, calibration_r);
  FamilyLengths fl = family_lengths(cal, calibration_n, threads);

  GrowthFit out;
  out.c0 = fl.c0;
  out.c1 = 3 * fl.c0 * std::exp(-fl.c0);
  out.offset = fl.c0;
  if (std::exp(-*lo_it / k + out.offset) > growth_r_cap)
    out.offset = 1 + fl.c0 / k;

  std::vector<double> sorted = Ls;
  std::sort(sorted.begin(), sorted.end());

  auto count_at = [&](double L) {
    double r = std::exp(-L / k + out.offset);
    TwistFamily tf = make_twist_family(kind, r);
    Mat2 A = eval_word(tf.st.generators, tf.alpha);
    Mat2 B = eval_word(tf.st.generators, tf.beta);
    GrowthPoint p;
    p.L = L;
    p.r = r;
    // Lengths increase past the first few members, so stop once over the
    // cutoff with a safety floor on the index.
    for (int n = 0;; ++n) {
      double len = member_length(tf, B, A, n);
      if (len <= L) ++p.count;
      else if (n >= 8) break;
    }
    return p;
  };

  out.points.resize(sorted.size());
  if (threads <= 1 || sorted.size() < 2) {
    for (std::size_t i = 0; i < sorted.size(); ++i)
      out.points[i] = count_at(sorted[i]);
  } else {
    std::vector<std::future<GrowthPoint>> futs;
    for (double L : sorted)
      futs.push_back(std::async(std::launch::async, count_at, L));
    for (std::size_t i = 0; i < futs.size(); ++i) out.points[i] = futs[i].get();
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& p : out.points) {
    if (p.count < 1) continue;
    double y = std::log(static_cast<double>(p.count));
    sx += p.L;
    sy += y;
    sxx += p.L * p.L;
    sxy += p.L * y;
    ++m;
  }
  if (m < 5) throw invalid_input("growth fit has fewer than 5 nonzero counts");
  out.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  out.intercept = (sy - out.slope * sx) / m;
  return out;
}

}  // namespace ksys
