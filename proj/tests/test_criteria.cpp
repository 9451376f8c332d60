#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hornich/catalog.hpp"
#include "hornich/criteria.hpp"
#include "hornich/error.hpp"
#include "hornich/operators.hpp"
#include "oracles.hpp"

using namespace hornich;

namespace {

constexpr double kPi = std::numbers::pi;

CircleSampler convex_of(const AnalyticFunction& f) {
  return circle_sampler([f](cplx z) { return convex_quotient(f, z); });
}

AnalyticFunction b(double alpha) { return get("b", {{"alpha", alpha}}); }

const std::vector<AnalyticFunction>& catalog_sample() {
  static const std::vector<AnalyticFunction> fs = {
      get("identity"), get("cayley"), get("halfplane"), get("koebe"), get("ozaki_plus"),
      get("ozaki_minus"), b(-3.2), b(0.6), get("kscale", {{"lambda", 0.25}, {"base", std::string("halfplane")}}),
      get("gscale", {{"gamma", 2.0}, {"base", std::string("cayley")}})};
  return fs;
}

}  // namespace

TEST_CASE("profile validation and parsing") {
  SamplingProfile p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.all_radii().size() == 8);
  SamplingProfile bad = p;
  bad.M = 63;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.radii = {0.5, 0.3};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.sharp_radii = {1.0};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.eps = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);

  const SamplingProfile q = parse_profile("# comment\nradii = 0.2, 0.4\nM=256\n\neps=1e-6 # trailing\n");
  CHECK(q.radii == std::vector<double>{0.2, 0.4});
  CHECK(q.M == 256);
  CHECK(q.eps == 1e-6);
  CHECK(q.sharp_radii == p.sharp_radii);
  CHECK(q.band == p.band);
  CHECK_THROWS_AS(parse_profile("nosuch=1"), Error);
  CHECK_THROWS_AS(parse_profile("M=abc"), Error);
  CHECK_THROWS_AS(parse_profile("radii"), Error);
  CHECK_THROWS_AS(load_profile("/nonexistent/profile.txt"), Error);
}

TEST_CASE("samples_for_radius") {
  const SamplingProfile p;
  CHECK(samples_for_radius(p, 0.5) == 2048);
  CHECK(samples_for_radius(p, 0.95) == 2048);
  CHECK(samples_for_radius(p, 0.99) == 4096);
  CHECK(samples_for_radius(p, 0.999) == 32768);
  CHECK(samples_for_radius(p, 0.99999) == kMaxAngularSamples);
}

TEST_CASE("merge keeps the worst outcome and the smallest margin") {
  const Verdict pass{Outcome::Pass, std::nullopt, 0.5};
  const Verdict ind{Outcome::Indeterminate, std::nullopt, 1e-9};
  const Verdict fail{Outcome::Fail, Witness{0.9, 1.0, 1.0, -2.0}, -0.1};
  CHECK(merge(pass, ind).outcome == Outcome::Indeterminate);
  CHECK(merge(ind, fail).outcome == Outcome::Fail);
  CHECK(merge(fail, pass).margin == -0.1);
  CHECK(merge(fail, pass).witness.has_value());
  CHECK(merge(merge(pass, ind), fail).margin == merge(pass, merge(ind, fail)).margin);
}

TEST_CASE("sample_circle") {
  const auto ones = sample_circle([](cplx) { return cplx(1.0); }, 0.5, 64);
  CHECK(ones == std::vector<double>(64, 1.0));
  const auto s = sample_circle([](cplx z) { return convex_quotient(get("cayley"), z); }, 0.5, 256);
  CHECK(*std::min_element(s.begin(), s.end()) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(s[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  for (std::size_t j = 0; j < s.size(); j += 17) {
    const cplx z = std::polar(0.5, 2 * kPi * static_cast<double>(j) / 256.0);
    CHECK(s[j] == doctest::Approx(((1.0 - z) / (1.0 + z)).real()).epsilon(1e-12));
  }
}

TEST_CASE("mean value property and full-circle integral") {
  const SamplingProfile p;
  for (const AnalyticFunction& f : catalog_sample()) {
    CAPTURE(f.name());
    for (double r : p.radii) {
      const auto s = sample_circle([&f](cplx z) { return convex_quotient(f, z); }, r, samples_for_radius(p, r));
      double mean = 0.0;
      for (double v : s) mean += v;
      mean /= static_cast<double>(s.size());
      CHECK(std::abs(mean - 1.0) < 1e-9);
      CHECK(std::abs(full_circle_integral(s) - 2 * kPi) < 1e-8);
    }
  }
}

TEST_CASE("min_arc_integral") {
  const std::vector<double> ones(128, 1.0);
  CHECK(min_arc_integral(ones) == doctest::Approx(2 * kPi / 128).epsilon(1e-12));
  CHECK(min_arc_integral(ones, ArcMode::BruteForce) == min_arc_integral(ones, ArcMode::Linear));

  const SamplingProfile p;
  const std::size_t m = samples_for_radius(p, 0.999);
  const double v32 = min_arc_integral(sample_circle([](cplx z) { return convex_quotient(b(-3.2), z); }, 0.999, m));
  const double v28 = min_arc_integral(sample_circle([](cplx z) { return convex_quotient(b(-2.8), z); }, 0.999, m));
  CHECK(std::abs(v32 - oracle::kaplan_binomial_exact(-3.2, 0.999)) < 1e-6);
  CHECK(std::abs(v28 - oracle::kaplan_binomial_exact(-2.8, 0.999)) < 1e-6);
  CHECK(v32 < -kPi);
  CHECK(v28 > -kPi);
  // Convergence to the r -> 1 limit (1 + alpha/2) 2 pi is slow.
  CHECK(std::abs(oracle::kaplan_binomial_exact(-3.2, 1 - 1e-9) - (1 - 1.6) * 2 * kPi) < 1e-3);
  // Arc endpoints sit on the sample grid, which costs O(h^2) against the
  // continuous minimum at M = 2048.
  for (double r : {0.5, 0.9, 0.99}) {
    const auto s = sample_circle([](cplx z) { return convex_quotient(b(-3.2), z); }, r, samples_for_radius(p, r));
    CHECK(std::abs(min_arc_integral(s) - oracle::kaplan_binomial_exact(-3.2, r)) < 1e-5);
  }
}

TEST_CASE("min_arc modes agree exactly and match a naive oracle") {
  auto g = oracle::rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + g() % 300;
    std::vector<double> v(m);
    for (double& x : v) x = oracle::uniform(g, -3, 3);
    const std::size_t max_len = 1 + g() % m;
    const ArcExtremum fast = min_arc(v, max_len, ArcMode::Linear);
    const ArcExtremum slow = min_arc(v, max_len, ArcMode::BruteForce);
    CHECK(fast.value == slow.value);
    CHECK(fast.length >= 1);
    CHECK(fast.length <= max_len);
    CHECK(std::abs(slow.value - oracle::naive_min_arc(v, max_len)) < 1e-10);
    CHECK(min_arc_integral(v, ArcMode::Linear) == min_arc_integral(v, ArcMode::BruteForce));
  }
}

TEST_CASE("test_convex_order") {
  const SamplingProfile p;
  CHECK(test_convex_order(convex_of(get("cayley")), 0.0, p).outcome == Outcome::Pass);
  const Verdict k = test_convex_order(convex_of(get("koebe")), 0.0, p);
  REQUIRE(k.outcome == Outcome::Fail);
  REQUIRE(k.witness.has_value());
  CHECK(k.witness->r > 2 - std::sqrt(3.0));
  CHECK(std::abs(k.witness->theta - kPi) < 0.01);
  CHECK(test_convex_order(convex_of(get("identity")), 1 - 2e-7, p).outcome == Outcome::Pass);
  CHECK(test_convex_order(convex_of(get("identity")), 1 - 1e-8, p).outcome == Outcome::Indeterminate);
  CHECK_THROWS_AS(test_convex_order(convex_of(get("identity")), 1.0, p), Error);

  // Only the small circles: Koebe is convex for r < 2 - sqrt 3.
  SamplingProfile small = p;
  small.radii = {0.1, 0.2, 0.25};
  small.sharp_radii = {};
  CHECK(test_convex_order(convex_of(get("koebe")), 0.0, small).outcome == Outcome::Pass);
}

TEST_CASE("convex order verdicts are monotone in lambda") {
  const SamplingProfile p;
  for (const AnalyticFunction& f : catalog_sample()) {
    CAPTURE(f.name());
    const auto F = convex_of(f);
    bool passed = false;
    for (double lambda : {0.9, 0.5, 0.0, -0.5, -1.0, -2.0}) {
      const bool now = test_convex_order(F, lambda, p).outcome == Outcome::Pass;
      if (passed) CHECK(now);
      passed = passed || now;
    }
  }
}

TEST_CASE("convex of order -1/2 implies Kaplan") {
  const SamplingProfile p;
  for (const AnalyticFunction& f : catalog_sample()) {
    CAPTURE(f.name());
    const auto F = convex_of(f);
    if (test_convex_order(F, -0.5, p).outcome == Outcome::Pass) {
      CHECK(test_close_to_convex(F, p).outcome == Outcome::Pass);
    }
  }
}

TEST_CASE("test_ozaki") {
  const SamplingProfile p;
  const Verdict oz = test_ozaki(convex_of(get("ozaki_plus")), 1.0, p);
  CHECK(oz.outcome == Outcome::Pass);
  CHECK(oz.margin < 1e-3);
  CHECK(test_ozaki(convex_of(get("identity")), 0.01, p).outcome == Outcome::Pass);
  const Verdict h = test_ozaki(convex_of(get("halfplane")), 1.0, p);
  CHECK(h.outcome == Outcome::Fail);
  CHECK(h.witness.has_value());
  CHECK_THROWS_AS(test_ozaki(convex_of(get("identity")), 0.0, p), Error);
}

TEST_CASE("test_close_to_convex") {
  const SamplingProfile p;
  const Verdict b1 = test_close_to_convex(convex_of(b(1.0)), p);
  CHECK(b1.outcome == Outcome::Pass);
  const Verdict bad = test_close_to_convex(convex_of(b(-3.2)), p);
  REQUIRE(bad.outcome == Outcome::Fail);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->r == 0.999);
  CHECK(bad.witness->theta_end > bad.witness->theta);
  CHECK(test_close_to_convex(convex_of(get("identity")), p).outcome == Outcome::Pass);
  CHECK(test_close_to_convex(convex_of(get("koebe")), p).outcome == Outcome::Pass);
}

TEST_CASE("test_starlike_bounds") {
  const SamplingProfile p;
  CHECK(test_starlike_bounds(get("cayley"), 0.5, INFINITY, p).outcome == Outcome::Pass);
  CHECK(test_starlike_bounds(get("halfplane"), 0.5, INFINITY, p).outcome == Outcome::Pass);
  CHECK(test_starlike_bounds(get("ozaki_plus"), 0.0, 4.0 / 3.0, p).outcome == Outcome::Pass);
  CHECK(test_starlike_bounds(get("ozaki_minus"), 0.0, 4.0 / 3.0, p).outcome == Outcome::Pass);
  CHECK(test_starlike_bounds(get("identity"), 0.5, INFINITY, p).outcome == Outcome::Pass);
  CHECK(test_starlike_bounds(get("koebe"), 0.5, INFINITY, p).outcome == Outcome::Fail);
  CHECK_THROWS_AS(test_starlike_bounds(get("identity"), 1.0, 1.0, p), Error);
}

TEST_CASE("audit_arc_bounds") {
  const SamplingProfile p;
  CHECK(audit_arc_bounds(get("halfplane"), p).outcome == Outcome::Pass);
  CHECK(audit_arc_bounds(get("cayley"), p).outcome == Outcome::Pass);
  CHECK(audit_arc_bounds(get("identity"), p).outcome == Outcome::Pass);
  // Koebe is not convex; its convexity integral goes negative on short arcs.
  CHECK(audit_arc_bounds(get("koebe"), p).outcome == Outcome::Fail);
}

TEST_CASE("refinement raises the sample count only near the threshold") {
  SamplingProfile p;
  p.radii = {0.5};
  p.sharp_radii = {};
  std::vector<std::size_t> seen;
  const CircleSampler F = [&seen](double, std::size_t m) {
    seen.push_back(m);
    return std::vector<double>(m, 1e-4);
  };
  CHECK(test_convex_order(F, 0.0, p).outcome == Outcome::Pass);
  CHECK(seen.front() == 2048);
  CHECK(seen.back() == kMaxAngularSamples);
  seen.clear();
  const CircleSampler G = [&seen](double, std::size_t m) {
    seen.push_back(m);
    return std::vector<double>(m, 1.0);
  };
  CHECK(test_convex_order(G, 0.0, p).outcome == Outcome::Pass);
  CHECK(seen.size() == 1);
}
