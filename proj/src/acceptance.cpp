#include "hornich/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hornich/catalog.hpp"
#include "hornich/operators.hpp"
#include "hornich/regions.hpp"

namespace hornich {
namespace {

constexpr std::size_t kAlgebraOrder = 64;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) { return format_number(x); }

// Members of F used by the randomized batteries; f(z)/z and f'(z) are
// zero-free in the disk for all of them.
std::vector<AnalyticFunction> random_pool() {
  return {get("identity"),
          get("cayley"),
          get("halfplane"),
          get("ozaki_plus"),
          get("ozaki_minus"),
          get("b", {{"alpha", 0.5}}),
          get("b", {{"alpha", -1.5}}),
          get("kscale", {{"lambda", 0.5}, {"base", std::string("halfplane")}}),
          get("gscale", {{"gamma", 2.0}, {"base", std::string("cayley")}})};
}

double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

Battery criterion_battery() {
  return {{get("cayley"), get("cayley")},
          {get("identity"), get("cayley")},
          {get("cayley"), get("identity")},
          {get("halfplane"), get("cayley")}};
}

struct ScanCriterion {
  CriterionResult result;
  ScanReport report;
};

ScanCriterion region_criterion(int id, const char* theorem_id, double limit, const AcceptanceOptions& opts) {
  ScanCriterion out;
  out.result.id = id;
  const auto t0 = Clock::now();
  ScanOptions so;
  so.threads = opts.threads;
  out.report = scan(theorem_id, criterion_battery(), so, opts.profile);
  out.result.seconds = seconds_since(t0);
  std::ostringstream d;
  d << out.report.cells.size() << " cells, " << out.report.mismatches.size() << " mismatches, "
    << fmt(std::round(out.result.seconds * 100) / 100) << " s (limit " << fmt(limit) << " s)";
  for (std::size_t k : out.report.mismatches) {
    d << "; mismatch at (" << fmt(out.report.cells[k].alpha) << ", " << fmt(out.report.cells[k].beta) << ")";
  }
  out.result.detail = d.str();
  out.result.passed = out.report.mismatches.empty() && out.result.seconds < limit;
  return out;
}

CriterionResult criterion3(const SamplingProfile& prof) {
  CriterionResult r{3, "b(alpha) lemma sharpness", true, {}, 0.0};
  std::ostringstream d;
  auto expect = [&](const char* test, double alpha, Outcome want) {
    const AnalyticFunction b = get("b", {{"alpha", alpha}});
    const CircleSampler F = circle_sampler([b](cplx z) { return convex_quotient(b, z); });
    const Verdict v = std::string_view(test) == "kaplan" ? test_close_to_convex(F, prof)
                                                         : test_convex_order(F, 0.0, prof);
    if (v.outcome != want) {
      r.passed = false;
      d << test << " b(" << fmt(alpha) << "): " << to_string(v.outcome) << " (want " << to_string(want)
        << "); ";
    }
  };
  int probes = 0;
  for (double a : {-3.4, -3.2}) expect("kaplan", a, Outcome::Fail), ++probes;
  for (int k = 0; k <= 9; ++k) expect("kaplan", -2.8 + 0.4 * k, Outcome::Pass), ++probes;
  for (double a : {-2.2, 0.2}) expect("convex", a, Outcome::Fail), ++probes;
  for (int k = 0; k <= 4; ++k) expect("convex", -1.8 + 0.4 * k, Outcome::Pass), ++probes;
  d << probes << " probes";
  r.detail = d.str();
  return r;
}

CriterionResult criterion4(std::mt19937_64& g) {
  CriterionResult r{4, "G/K sharpness closed forms", true, {}, 0.0};
  const AnalyticFunction oz = get("ozaki_plus");
  const AnalyticFunction cay = get("cayley");
  double worst = std::abs(logderiv_C(1.0, 0.5, oz, cay, 0.8) - (-1.0 / 9.0));
  const double first = worst;
  for (int k = 0; k < 20; ++k) {
    const double a = uniform(g, -1.0, 3.0);
    const double b = uniform(g, std::max(-1.0, 1.1 - a), 3.0);
    const double s = a + b;
    const double z = 2.0 / (s + 1.0);
    const double want = -3.0 * b * (s - 1.0) / (s * (s + 3.0));
    worst = std::max(worst, std::abs(logderiv_C(a, b, oz, cay, z) - want));
  }
  r.passed = worst < 1e-9;
  r.detail = "|value + 1/9| = " + fmt(first) + ", max error over 21 points " + fmt(worst) + " (tol 1e-9)";
  return r;
}

CriterionResult criterion5(std::mt19937_64& g) {
  CriterionResult r{5, "log-derivative identity vs series", true, {}, 0.0};
  const auto pool = random_pool();
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const AnalyticFunction& f = pool[g() % pool.size()];
    const AnalyticFunction& h = pool[g() % pool.size()];
    const double a = uniform(g, -2.0, 2.0);
    const double b = uniform(g, -2.0, 2.0);
    const cplx z = std::polar(0.5 * std::sqrt(uniform(g, 0.0, 1.0)), uniform(g, 0.0, 2.0 * std::numbers::pi));
    const Series c = apply_family(make_spec(Family::Cfam, a, b), f, h, Series::kDefaultOrder);
    const cplx want = series_logderiv(c, z);
    worst = std::max(worst, std::abs(logderiv_C(a, b, f, h, z) - want));
  }
  r.passed = worst < 1e-8;
  r.detail = "max error over 50 cases " + fmt(worst) + " (tol 1e-8)";
  return r;
}

CriterionResult criterion6(std::mt19937_64& g) {
  CriterionResult r{6, "Hornich algebra and operator relations", true, {}, 0.0};
  const auto pool = random_pool();
  const AnalyticFunction id = get("identity");
  const std::size_t n = kAlgebraOrder;
  double worst = 0.0;
  auto track = [&worst](const Series& x, const Series& y) { worst = std::max(worst, max_coeff_error(x, y)); };
  for (int k = 0; k < 20; ++k) {
    const AnalyticFunction& f = pool[g() % pool.size()];
    const AnalyticFunction& h = pool[g() % pool.size()];
    const double s = uniform(g, -1.5, 1.5);
    const double t = uniform(g, -1.5, 1.5);
    const double a = uniform(g, -2.0, 2.0);
    const double b = uniform(g, -2.0, 2.0);
    const Series fs = f.series(n);
    const Series hs = h.series(n);
    track(hornich_scale(s, hornich_scale(t, fs)), hornich_scale(s * t, fs));
    track(hornich_scale(s, hornich_sum(fs, hs)), hornich_sum(hornich_scale(s, fs), hornich_scale(s, hs)));
    track(hornich_scale(s + t, fs), hornich_sum(hornich_scale(s, fs), hornich_scale(t, fs)));
    const Series c_fid = apply_family(make_spec(Family::Cfam, a, b), f, id, n);
    track(c_fid, apply_family(make_spec(Family::Jfam, a, b), f, id, n));
    track(c_fid, apply_family(make_spec(Family::Jfam, a, 0.0), f, h, n));
    track(apply_family(make_spec(Family::Cfam, a, b), id, h, n),
          apply_family(make_spec(Family::Ifam, a, b), id, h, n));
  }
  r.passed = worst < 1e-9;
  r.detail = "max coefficient error over 20 cases " + fmt(worst) + " (tol 1e-9)";
  return r;
}

CriterionResult criterion7(const SamplingProfile& prof) {
  CriterionResult r{7, "scaling lemmas", true, {}, 0.0};
  auto conv = [](const AnalyticFunction& f) {
    return circle_sampler([f](cplx z) { return convex_quotient(f, z); });
  };
  const double lambda = 0.5;
  const AnalyticFunction k = get("kscale", {{"lambda", lambda}, {"base", std::string("halfplane")}});
  const AnalyticFunction back = hornich_scaled(1.0 / (1.0 - lambda), k);
  const AnalyticFunction gs = get("gscale", {{"gamma", 2.0}, {"base", std::string("halfplane")}});
  const Verdict v1 = test_convex_order(conv(k), lambda, prof);
  const Verdict v2 = test_convex_order(conv(back), 0.0, prof);
  const Verdict v3 = test_ozaki(conv(gs), 2.0, prof);
  r.passed = v1.outcome == Outcome::Pass && v2.outcome == Outcome::Pass && v3.outcome == Outcome::Pass;
  r.detail = "K(1/2): " + to_string(v1.outcome) + " margin " + fmt(v1.margin) + "; rescaled into K: " +
             to_string(v2.outcome) + " margin " + fmt(v2.margin) + "; G(2): " + to_string(v3.outcome) +
             " margin " + fmt(v3.margin);
  return r;
}

CriterionResult criterion8(const SamplingProfile& prof) {
  CriterionResult r{8, "arc-bound lemma audit", true, {}, 0.0};
  std::ostringstream d;
  double worst_full = 0.0;
  for (const AnalyticFunction& f :
       {get("cayley"), get("halfplane"), get("kscale", {{"lambda", 0.25}, {"base", std::string("halfplane")}})}) {
    const Verdict v = audit_arc_bounds(f, prof);
    if (v.outcome != Outcome::Pass) {
      r.passed = false;
      d << f.name() << ": " << to_string(v.outcome) << " margin " << fmt(v.margin) << "; ";
    }
    for (double rad : prof.radii) {
      const auto s = sample_circle([&f](cplx z) { return convex_quotient(f, z); }, rad,
                                   samples_for_radius(prof, rad));
      worst_full = std::max(worst_full, std::abs(full_circle_integral(s) - 2.0 * std::numbers::pi));
    }
  }
  if (worst_full >= 1e-8) r.passed = false;
  d << "full-circle error " << fmt(worst_full) << " (tol 1e-8)";
  r.detail = d.str();
  return r;
}

CriterionResult criterion9(const std::vector<const ScanReport*>& reports) {
  CriterionResult r{9, "convexity of empirical regions", true, {}, 0.0};
  std::ostringstream d;
  for (const ScanReport* rep : reports) {
    const ConvexityAudit a = convexity_audit(*rep);
    if (a.verdict.outcome != Outcome::Pass) r.passed = false;
    if (rep != reports.front()) d << "; ";
    d << rep->theorem_id << ": " << to_string(a.verdict.outcome) << " (" << a.offending.size()
      << " violations)";
  }
  r.detail = d.str();
  return r;
}

CriterionResult criterion10(std::mt19937_64& g) {
  CriterionResult r{10, "linear vs brute-force arc minimum", true, {}, 0.0};
  int equal = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = 64 + g() % 449;
    std::vector<double> v(m);
    for (double& x : v) x = uniform(g, -3.0, 3.0);
    if (min_arc_integral(v, ArcMode::Linear) == min_arc_integral(v, ArcMode::BruteForce)) ++equal;
  }
  r.passed = equal == 50;
  r.detail = std::to_string(equal) + "/50 vectors bitwise equal";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  auto add = [&](CriterionResult r) {
    out.push_back(std::move(r));
    if (on_result) on_result(out.back());
  };
  auto timed = [](auto&& fn) {
    const auto t0 = Clock::now();
    CriterionResult r = fn();
    r.seconds = seconds_since(t0);
    return r;
  };

  ScanCriterion c1 = region_criterion(1, "KK-K", 60.0, opts);
  c1.result.title = "convex pair into K region";
  add(c1.result);
  ScanCriterion c2 = region_criterion(2, "KK-C", 120.0, opts);
  c2.result.title = "convex pair into C region";
  add(c2.result);

  std::mt19937_64 rng(opts.seed);
  add(timed([&] { return criterion3(opts.profile); }));
  add(timed([&] { return criterion4(rng); }));
  add(timed([&] { return criterion5(rng); }));
  add(timed([&] { return criterion6(rng); }));
  add(timed([&] { return criterion7(opts.profile); }));
  add(timed([&] { return criterion8(opts.profile); }));
  add(timed([&] { return criterion9({&c1.report, &c2.report}); }));
  add(timed([&] { return criterion10(rng); }));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " -- " << r.detail;
  return s.str();
}

}  // namespace hornich
