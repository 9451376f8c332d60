#include "hornich/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "hornich/error.hpp"
#include "hornich/operators.hpp"

namespace hornich {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> parse_list(const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadProfile, "bad number '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw Error(ErrorCode::BadProfile, "bad number '" + item + "'");
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct RadiusResult {
  double margin;
  Witness witness;
};

using RadiusTest = std::function<RadiusResult(const std::vector<double>&, double, std::size_t)>;

Outcome classify(double margin, double eps) {
  if (margin > eps) return Outcome::Pass;
  if (margin < -eps) return Outcome::Fail;
  return Outcome::Indeterminate;
}

// Evaluates `test` on every circle of the profile, then keeps doubling the
// sample count of the currently worst circle while its margin sits inside the
// band and the cap allows.
RadiusResult run_circles(const CircleSampler& F, const SamplingProfile& prof, const RadiusTest& test) {
  prof.validate();
  const std::vector<double> radii = prof.all_radii();
  std::vector<std::size_t> ms(radii.size());
  std::vector<RadiusResult> results;
  results.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    ms[i] = samples_for_radius(prof, radii[i]);
    results.push_back(test(F(radii[i], ms[i]), radii[i], ms[i]));
  }
  while (true) {
    const auto worst = static_cast<std::size_t>(
        std::min_element(results.begin(), results.end(),
                         [](const RadiusResult& a, const RadiusResult& b) { return a.margin < b.margin; }) -
        results.begin());
    if (std::abs(results[worst].margin) >= prof.band || ms[worst] >= kMaxAngularSamples) {
      return results[worst];
    }
    ms[worst] *= 2;
    results[worst] = test(F(radii[worst], ms[worst]), radii[worst], ms[worst]);
  }
}

Verdict to_verdict(const RadiusResult& res, double eps) {
  Verdict v;
  v.margin = res.margin;
  v.outcome = classify(res.margin, eps);
  if (v.outcome == Outcome::Fail) v.witness = res.witness;
  return v;
}

double angle(std::size_t j, std::size_t m) {
  return kTwoPi * static_cast<double>(j % m) / static_cast<double>(m);
}

// Prefix sums of the trapezoid rule over the doubled sample array.
std::vector<double> wrapped_prefix(std::span<const double> h) {
  const std::size_t m = h.size();
  const double step = kTwoPi / static_cast<double>(m);
  std::vector<double> t(2 * m);
  for (std::size_t k = 0; k + 1 < 2 * m; ++k) {
    t[k + 1] = t[k] + step * 0.5 * (h[k % m] + h[(k + 1) % m]);
  }
  return t;
}

ArcExtremum min_difference(const std::vector<double>& t, std::size_t m, std::size_t max_length,
                           ArcMode mode) {
  ArcExtremum best{std::numeric_limits<double>::infinity(), 0, 0};
  if (mode == ArcMode::BruteForce) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t len = 1; len <= max_length; ++len) {
        const double v = t[i + len] - t[i];
        if (v < best.value) best = {v, i, len};
      }
    }
    return best;
  }
  // For each end j keep the start i in [j - max_length, min(j-1, m-1)] with
  // the largest prefix value in a monotone deque.
  std::deque<std::size_t> window;
  for (std::size_t j = 1; j < 2 * m; ++j) {
    const std::size_t candidate = j - 1;
    if (candidate < m) {
      while (!window.empty() && t[window.back()] <= t[candidate]) window.pop_back();
      window.push_back(candidate);
    }
    while (!window.empty() && window.front() + max_length < j) window.pop_front();
    if (window.empty()) continue;
    const std::size_t i = window.front();
    const double v = t[j] - t[i];
    if (v < best.value) best = {v, i, j - i};
  }
  return best;
}

}  // namespace

void SamplingProfile::validate() const {
  auto check_radii = [](const std::vector<double>& rs, const char* what) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (!(rs[i] > 0.0 && rs[i] < 1.0)) {
        throw Error(ErrorCode::BadProfile, std::string(what) + " must lie in (0,1)");
      }
      if (i > 0 && !(rs[i] > rs[i - 1])) {
        throw Error(ErrorCode::BadProfile, std::string(what) + " must be ascending");
      }
    }
  };
  if (radii.empty()) throw Error(ErrorCode::BadProfile, "radii must not be empty");
  check_radii(radii, "radii");
  check_radii(sharp_radii, "sharp_radii");
  if (M < 64 || M % 2 != 0) throw Error(ErrorCode::BadProfile, "M must be even and >= 64");
  if (M > kMaxAngularSamples) throw Error(ErrorCode::BadProfile, "M exceeds 65536");
  if (!(eps > 0.0)) throw Error(ErrorCode::BadProfile, "eps must be positive");
  if (!(band > 0.0)) throw Error(ErrorCode::BadProfile, "band must be positive");
}

std::vector<double> SamplingProfile::all_radii() const {
  std::vector<double> out = radii;
  out.insert(out.end(), sharp_radii.begin(), sharp_radii.end());
  return out;
}

SamplingProfile parse_profile(std::string_view text, SamplingProfile base) {
  std::stringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::BadProfile, "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "radii") {
      base.radii = parse_list(value);
    } else if (key == "sharp_radii") {
      base.sharp_radii = value.empty() ? std::vector<double>{} : parse_list(value);
    } else if (key == "M") {
      const auto v = parse_list(value);
      if (v.size() != 1 || v[0] != std::floor(v[0]) || v[0] < 0) {
        throw Error(ErrorCode::BadProfile, "M must be a single integer");
      }
      base.M = static_cast<std::size_t>(v[0]);
    } else if (key == "eps" || key == "band") {
      const auto v = parse_list(value);
      if (v.size() != 1) throw Error(ErrorCode::BadProfile, key + " must be a single number");
      (key == "eps" ? base.eps : base.band) = v[0];
    } else {
      throw Error(ErrorCode::BadProfile, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  base.validate();
  return base;
}

SamplingProfile load_profile(const std::string& path, SamplingProfile base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadProfile, "cannot open profile '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str(), std::move(base));
}

std::size_t samples_for_radius(const SamplingProfile& prof, double r) {
  const double need = std::ceil(std::log(1e-12) / std::log(r));
  std::size_t m = prof.M;
  while (static_cast<double>(m) < need && m < kMaxAngularSamples) m *= 2;
  return std::min(m, kMaxAngularSamples);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "Pass";
    case Outcome::Indeterminate: return "Indeterminate";
    case Outcome::Fail: return "Fail";
  }
  return "?";
}

Verdict merge(const Verdict& a, const Verdict& b) {
  Verdict out;
  out.outcome = std::max(a.outcome, b.outcome);
  const Verdict& lower = a.margin <= b.margin ? a : b;
  out.margin = lower.margin;
  out.witness = lower.witness;
  if (!out.witness) out.witness = a.witness ? a.witness : b.witness;
  return out;
}

std::vector<double> sample_circle(const PointEvaluator& h, double r, std::size_t m) {
  if (!(r < 1.0)) throw Error(ErrorCode::OutsideDisk, "sample radius must be < 1");
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = h(std::polar(r, angle(j, m))).real();
  return out;
}

CircleSampler circle_sampler(PointEvaluator h) {
  return [h = std::move(h)](double r, std::size_t m) { return sample_circle(h, r, m); };
}

ArcExtremum min_arc(std::span<const double> samples, std::size_t max_length, ArcMode mode) {
  const std::size_t m = samples.size();
  if (m < 2) throw Error(ErrorCode::BadParam, "arc search needs at least two samples");
  max_length = std::clamp<std::size_t>(max_length, 1, m);
  return min_difference(wrapped_prefix(samples), m, max_length, mode);
}

double min_arc_integral(std::span<const double> samples, ArcMode mode) {
  return min_arc(samples, samples.size() - 1, mode).value;
}

double full_circle_integral(std::span<const double> samples) {
  const auto t = wrapped_prefix(samples);
  return t[samples.size()];
}

Verdict test_convex_order(const CircleSampler& F, double lambda, const SamplingProfile& prof) {
  if (!(lambda < 1.0)) throw Error(ErrorCode::BadParam, "K(lambda) needs lambda < 1");
  const auto res = run_circles(F, prof, [lambda](const std::vector<double>& s, double r, std::size_t m) {
    const auto it = std::min_element(s.begin(), s.end());
    const auto j = static_cast<std::size_t>(it - s.begin());
    return RadiusResult{*it - lambda, {r, angle(j, m), angle(j, m), *it}};
  });
  return to_verdict(res, prof.eps);
}

Verdict test_ozaki(const CircleSampler& F, double gamma, const SamplingProfile& prof) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::BadParam, "G(gamma) needs gamma > 0");
  const double bound = 1.0 + gamma / 2.0;
  const auto res = run_circles(F, prof, [bound](const std::vector<double>& s, double r, std::size_t m) {
    const auto it = std::max_element(s.begin(), s.end());
    const auto j = static_cast<std::size_t>(it - s.begin());
    return RadiusResult{bound - *it, {r, angle(j, m), angle(j, m), *it}};
  });
  return to_verdict(res, prof.eps);
}

Verdict test_close_to_convex(const CircleSampler& F, const SamplingProfile& prof) {
  const auto res = run_circles(F, prof, [](const std::vector<double>& s, double r, std::size_t m) {
    const ArcExtremum arc = min_arc(s, m - 1);
    return RadiusResult{arc.value + std::numbers::pi,
                        {r, angle(arc.start, m), angle(arc.start, m) + kTwoPi * static_cast<double>(arc.length) / static_cast<double>(m),
                         arc.value}};
  });
  return to_verdict(res, prof.eps);
}

Verdict test_starlike_bounds(const AnalyticFunction& f, double lo, double hi,
                             const SamplingProfile& prof) {
  if (!(lo < hi)) throw Error(ErrorCode::BadParam, "starlike bounds need lo < hi");
  const CircleSampler F = circle_sampler([&f](cplx z) { return starlike_quotient(f, z); });
  const auto res = run_circles(F, prof, [lo, hi](const std::vector<double>& s, double r, std::size_t m) {
    const auto [mn, mx] = std::minmax_element(s.begin(), s.end());
    const double low = *mn - lo;
    const double high = hi - *mx;
    const auto j = static_cast<std::size_t>((low <= high ? mn : mx) - s.begin());
    return RadiusResult{std::min(low, high), {r, angle(j, m), angle(j, m), s[j]}};
  });
  return to_verdict(res, prof.eps);
}

Verdict audit_arc_bounds(const AnalyticFunction& f, const SamplingProfile& prof) {
  prof.validate();
  Verdict out{Outcome::Pass, std::nullopt, std::numeric_limits<double>::infinity()};
  for (const double r : prof.all_radii()) {
    const std::size_t m = samples_for_radius(prof, r);
    const double step = kTwoPi / static_cast<double>(m);
    const auto star = sample_circle([&f](cplx z) { return starlike_quotient(f, z); }, r, m);
    const auto conv = sample_circle([&f](cplx z) { return convex_quotient(f, z); }, r, m);

    // Subtracting 1/2 from every sample turns int Re(zf'/f) - (theta2-theta1)/2
    // into a plain arc integral.
    std::vector<double> shifted(m), neg_shifted(m), neg_conv(m);
    for (std::size_t j = 0; j < m; ++j) {
      shifted[j] = star[j] - 0.5;
      neg_shifted[j] = -shifted[j];
      neg_conv[j] = -conv[j];
    }
    auto check = [&](const ArcExtremum& arc, double margin) {
      Verdict v;
      v.margin = margin;
      v.outcome = margin < -prof.eps ? Outcome::Fail : Outcome::Pass;
      if (v.outcome == Outcome::Fail) {
        v.witness = Witness{r, angle(arc.start, m),
                            angle(arc.start, m) + step * static_cast<double>(arc.length), arc.value};
      }
      out = merge(out, v);
    };
    const ArcExtremum lower1 = min_arc(shifted, m);
    check(lower1, lower1.value);
    const ArcExtremum upper1 = min_arc(neg_shifted, m);
    check(upper1, std::numbers::pi + upper1.value);
    const ArcExtremum lower2 = min_arc(conv, m);
    check(lower2, lower2.value);
    const ArcExtremum upper2 = min_arc(neg_conv, m);
    check(upper2, kTwoPi + upper2.value);
  }
  return out;
}

}  // namespace hornich
