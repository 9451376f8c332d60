#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hornich/catalog.hpp"

namespace hornich {

struct SamplingProfile {
  std::vector<double> radii{0.1, 0.3, 0.5, 0.7, 0.9, 0.95};
  std::vector<double> sharp_radii{0.99, 0.999};
  std::size_t M = 2048;  // angular samples per circle before refinement
  double eps = 1e-7;     // strict inequalities are decided at +-eps
  double band = 1e-3;    // margins below this trigger angular refinement

  // Throws BadProfile on radii outside (0,1), non-ascending radii, odd or
  // too-small M, or non-positive eps/band.
  void validate() const;
  std::vector<double> all_radii() const;
};

// Applies `key=value` lines (keys radii, sharp_radii, M, eps, band; '#'
// starts a comment) on top of `base`.
SamplingProfile parse_profile(std::string_view text, SamplingProfile base = {});
SamplingProfile load_profile(const std::string& path, SamplingProfile base = {});

inline constexpr std::size_t kMaxAngularSamples = 65536;

// Angular sample count used on the circle |z| = r: the profile's M doubled
// until r^M < 1e-12 (capped at 2^16), so the periodic trapezoid rule has
// converged even at r = 0.999.
std::size_t samples_for_radius(const SamplingProfile& prof, double r);

enum class Outcome { Pass, Indeterminate, Fail };
std::string to_string(Outcome o);

struct Witness {
  double r = 0.0;
  double theta = 0.0;
  double theta_end = 0.0;  // equals theta for point witnesses
  double value = 0.0;
};

struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::optional<Witness> witness;
  double margin = 0.0;
};

// Worst outcome wins; the smaller margin (and its witness) is kept.
Verdict merge(const Verdict& a, const Verdict& b);

using PointEvaluator = std::function<cplx(cplx)>;
// Real parts of a pointwise quantity on |z| = r at theta_j = 2 pi j / m.
using CircleSampler = std::function<std::vector<double>(double r, std::size_t m)>;

std::vector<double> sample_circle(const PointEvaluator& h, double r, std::size_t m);
CircleSampler circle_sampler(PointEvaluator h);

enum class ArcMode { BruteForce, Linear };

struct ArcExtremum {
  double value = 0.0;
  std::size_t start = 0;   // sample index of theta_1
  std::size_t length = 0;  // arc spans `length` sample steps
};

// Minimum over all arcs of 1..max_length steps of the trapezoid integral of
// the periodic samples (step 2 pi / M). Both modes read the same prefix sums
// over the wrapped array, so their minima are bitwise identical.
ArcExtremum min_arc(std::span<const double> samples, std::size_t max_length,
                    ArcMode mode = ArcMode::Linear);

// Kaplan kernel: minimum over arcs shorter than the full circle.
double min_arc_integral(std::span<const double> samples, ArcMode mode = ArcMode::Linear);

// Re(1 + zF''/F') > lambda on every circle of the profile.
Verdict test_convex_order(const CircleSampler& F, double lambda, const SamplingProfile& prof);
// Re(1 + zF''/F') < 1 + gamma/2.
Verdict test_ozaki(const CircleSampler& F, double gamma, const SamplingProfile& prof);
// Every arc integral of Re(1 + zF''/F') exceeds -pi. Arcs of length 2 pi or
// more only add full-circle integrals (2 pi each), so arcs shorter than the
// circle suffice.
Verdict test_close_to_convex(const CircleSampler& F, const SamplingProfile& prof);
// lo < Re(z f'/f) < hi; hi may be +infinity.
Verdict test_starlike_bounds(const AnalyticFunction& f, double lo, double hi,
                             const SamplingProfile& prof);

// Checks, over every sampled arc 0 < theta2 - theta1 <= 2 pi on every radius,
//   (theta2-theta1)/2 < int Re(z f'/f) <= pi + (theta2-theta1)/2,
//   0 < int Re(1 + z f''/f') <= 2 pi.
// The bounds are non-strict within eps, so the verdict is Pass or Fail.
Verdict audit_arc_bounds(const AnalyticFunction& f, const SamplingProfile& prof);

// Trapezoid integral of samples over the whole circle.
double full_circle_integral(std::span<const double> samples);

}  // namespace hornich
