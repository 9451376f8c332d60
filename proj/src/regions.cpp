#include "hornich/regions.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "hornich/error.hpp"
#include "hornich/operators.hpp"

namespace hornich {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Term {
  double a;
  double b;
};

// lo <= t <= hi for each middle term t, lower bound first.
void chain(std::vector<Constraint>& out, double lo, std::initializer_list<Term> terms, double hi) {
  for (const Term& t : terms) {
    out.push_back({-t.a, -t.b, -lo});
    out.push_back({t.a, t.b, hi});
  }
}

void at_most(std::vector<Constraint>& out, double a, double b, double c) { out.push_back({a, b, c}); }
void at_least(std::vector<Constraint>& out, double a, double b, double c) {
  out.push_back({-a, -b, -c});
}

using K = InputClass;
using T = TargetClass;

const std::vector<TheoremInfo> kTheorems = {
    {"KK-K", "0<=alpha, 2beta, alpha+2beta<=2", K::K, K::K, T::K},
    {"KK-C", "-1<=alpha, 2beta, alpha+2beta<=3", K::K, K::K, T::C},
    {"KKl-K", "0<=alpha, 2beta(1-lambda), alpha+2beta(1-lambda)<=2", K::K, K::KLambda, T::K},
    {"KKl-Kl", "0<=alpha, 2beta(1-lambda), alpha+2beta(1-lambda)<=2(1-lambda)", K::K, K::KLambda,
     T::KLambda},
    {"KKl-Gg", "-gamma<=alpha, 2beta(1-lambda), alpha+2beta(1-lambda)<=0", K::K, K::KLambda, T::GGamma},
    {"KKl-C", "-1<=alpha, 2beta(1-lambda), alpha+2beta(1-lambda)<=3", K::K, K::KLambda, T::C},
    {"KGg-K", "0<=alpha, -beta*gamma, alpha-beta*gamma<=2", K::K, K::GGamma, T::K},
    {"KGg-Kl", "0<=alpha, -beta*gamma, alpha-beta*gamma<=2(1-lambda)", K::K, K::GGamma, T::KLambda},
    {"KGg-Gg", "-gamma<=alpha, -beta*gamma, alpha-beta*gamma<=0", K::K, K::GGamma, T::GGamma},
    {"KGg-C", "-1<=alpha, -beta*gamma, alpha-beta*gamma<=3", K::K, K::GGamma, T::C},
    {"GK-K", "0<=beta<=1, alpha+beta<=1, 3beta-alpha<=3", K::G, K::K, T::K},
    {"GKl-K", "-3<=alpha<=1, 0<=beta(1-lambda)<=1, alpha+beta(1-lambda)<=1, 3beta(1-lambda)-alpha<=3",
     K::G, K::KLambda, T::K},
    {"GKl-Kl",
     "-3(1-lambda)<=alpha<=(1-lambda), 0<=beta<=1, alpha+beta(1-lambda)<=(1-lambda), "
     "3beta(1-lambda)-alpha<=3(1-lambda)",
     K::G, K::KLambda, T::KLambda},
    {"GKl-G",
     "-1/2<=alpha<=3/2, -1/2<=beta(1-lambda)<=0, alpha+beta(1-lambda)>=-1/2, "
     "3beta(1-lambda)-alpha>=-1/2",
     K::G, K::KLambda, T::G},
    {"GKl-Gg",
     "-gamma/2<=alpha<=3gamma/2, -gamma/2<=beta(1-lambda)<=0, alpha+beta(1-lambda)>=-gamma/2, "
     "3beta(1-lambda)-alpha>=-gamma/2",
     K::G, K::KLambda, T::GGamma},
    {"GGg-K", "-3<=alpha<=1, -2/gamma<=beta<=0, alpha-beta*gamma/2<=1, -3beta*gamma/2-alpha<=3", K::G,
     K::GGamma, T::K},
    {"GGg-Kl",
     "-3(1-lambda)<=alpha<=(1-lambda), -2(1-lambda)/gamma<=beta<=0, alpha-beta*gamma/2<=(1-lambda), "
     "-3beta*gamma/2-alpha<=3(1-lambda)",
     K::G, K::GGamma, T::KLambda},
    {"GGg-G", "-1/2<=alpha<=3/2, 0<=beta<=1, -2alpha+beta<=1, 3beta+2alpha<=3", K::G, K::GGamma, T::G},
    {"GGg-Gg", "-gamma/2<=alpha<=3gamma/2, 0<=beta<=1, -2alpha/gamma+beta<=1, 3beta+2alpha/gamma<=3",
     K::G, K::GGamma, T::GGamma},
    {"J-K", "0<=alpha<=2", K::K, K::Identity, T::K},
    {"I-K", "0<=beta<=1", K::Identity, K::K, T::K},
    {"J-C", "-1<=alpha<=3", K::K, K::Identity, T::C},
    {"I-C", "-1/2<=beta<=3/2", K::Identity, K::K, T::C},
    {"JG-Kl", "-3(1-lambda)<=alpha<=(1-lambda)", K::G, K::Identity, T::KLambda},
    {"JG-Gg", "-gamma/2<=alpha<=3gamma/2", K::G, K::Identity, T::GGamma},
    {"JG-G", "-1/2<=alpha<=3/2", K::G, K::Identity, T::G},
};

std::vector<Constraint> build_constraints(std::string_view id, double lambda, double gamma) {
  const double L = 1.0 - lambda;
  const double g = gamma;
  std::vector<Constraint> c;
  if (id == "KK-K") {
    chain(c, 0, {{1, 0}, {0, 2}, {1, 2}}, 2);
  } else if (id == "KK-C") {
    chain(c, -1, {{1, 0}, {0, 2}, {1, 2}}, 3);
  } else if (id == "KKl-K") {
    chain(c, 0, {{1, 0}, {0, 2 * L}, {1, 2 * L}}, 2);
  } else if (id == "KKl-Kl") {
    chain(c, 0, {{1, 0}, {0, 2 * L}, {1, 2 * L}}, 2 * L);
  } else if (id == "KKl-Gg") {
    chain(c, -g, {{1, 0}, {0, 2 * L}, {1, 2 * L}}, 0);
  } else if (id == "KKl-C") {
    chain(c, -1, {{1, 0}, {0, 2 * L}, {1, 2 * L}}, 3);
  } else if (id == "KGg-K") {
    chain(c, 0, {{1, 0}, {0, -g}, {1, -g}}, 2);
  } else if (id == "KGg-Kl") {
    chain(c, 0, {{1, 0}, {0, -g}, {1, -g}}, 2 * L);
  } else if (id == "KGg-Gg") {
    chain(c, -g, {{1, 0}, {0, -g}, {1, -g}}, 0);
  } else if (id == "KGg-C") {
    chain(c, -1, {{1, 0}, {0, -g}, {1, -g}}, 3);
  } else if (id == "GK-K") {
    chain(c, 0, {{0, 1}}, 1);
    at_most(c, 1, 1, 1);
    at_most(c, -1, 3, 3);
  } else if (id == "GKl-K") {
    chain(c, -3, {{1, 0}}, 1);
    chain(c, 0, {{0, L}}, 1);
    at_most(c, 1, L, 1);
    at_most(c, -1, 3 * L, 3);
  } else if (id == "GKl-Kl") {
    chain(c, -3 * L, {{1, 0}}, L);
    chain(c, 0, {{0, 1}}, 1);
    at_most(c, 1, L, L);
    at_most(c, -1, 3 * L, 3 * L);
  } else if (id == "GKl-G") {
    chain(c, -0.5, {{1, 0}}, 1.5);
    chain(c, -0.5, {{0, L}}, 0);
    at_least(c, 1, L, -0.5);
    at_least(c, -1, 3 * L, -0.5);
  } else if (id == "GKl-Gg") {
    chain(c, -g / 2, {{1, 0}}, 3 * g / 2);
    chain(c, -g / 2, {{0, L}}, 0);
    at_least(c, 1, L, -g / 2);
    at_least(c, -1, 3 * L, -g / 2);
  } else if (id == "GGg-K") {
    chain(c, -3, {{1, 0}}, 1);
    chain(c, -2 / g, {{0, 1}}, 0);
    at_most(c, 1, -g / 2, 1);
    at_most(c, -1, -3 * g / 2, 3);
  } else if (id == "GGg-Kl") {
    chain(c, -3 * L, {{1, 0}}, L);
    chain(c, -2 * L / g, {{0, 1}}, 0);
    at_most(c, 1, -g / 2, L);
    at_most(c, -1, -3 * g / 2, 3 * L);
  } else if (id == "GGg-G") {
    chain(c, -0.5, {{1, 0}}, 1.5);
    chain(c, 0, {{0, 1}}, 1);
    at_most(c, -2, 1, 1);
    at_most(c, 2, 3, 3);
  } else if (id == "GGg-Gg") {
    chain(c, -g / 2, {{1, 0}}, 3 * g / 2);
    chain(c, 0, {{0, 1}}, 1);
    at_most(c, -2 / g, 1, 1);
    at_most(c, 2 / g, 3, 3);
  } else if (id == "J-K") {
    chain(c, 0, {{1, 0}}, 2);
  } else if (id == "I-K") {
    chain(c, 0, {{0, 1}}, 1);
  } else if (id == "J-C") {
    chain(c, -1, {{1, 0}}, 3);
  } else if (id == "I-C") {
    chain(c, -0.5, {{0, 1}}, 1.5);
  } else if (id == "JG-Kl") {
    chain(c, -3 * L, {{1, 0}}, L);
  } else if (id == "JG-Gg") {
    chain(c, -g / 2, {{1, 0}}, 3 * g / 2);
  } else if (id == "JG-G") {
    chain(c, -0.5, {{1, 0}}, 1.5);
  } else {
    throw Error(ErrorCode::UnknownTheorem, "no theorem '" + std::string(id) + "'");
  }
  for (Constraint& k : c) {
    // Normalize -0 so printing is stable.
    k.a += 0.0;
    k.b += 0.0;
    k.c += 0.0;
  }
  return c;
}

bool uses_lambda(const TheoremInfo& t) {
  return t.f_class == InputClass::KLambda || t.g_class == InputClass::KLambda ||
         t.target == TargetClass::KLambda;
}

bool uses_gamma(const TheoremInfo& t) {
  return t.f_class == InputClass::GGamma || t.g_class == InputClass::GGamma ||
         t.target == TargetClass::GGamma;
}

std::string fmt(double x) { return format_number(x == 0.0 ? 0.0 : x); }

// Member of the given class obtained from a convex base (identity, cayley or
// halfplane) through the scaling lemmas.
AnalyticFunction member(InputClass cls, const std::string& base, double lambda, double gamma) {
  switch (cls) {
    case InputClass::K:
      return get(base);
    case InputClass::KLambda:
      if (base == "identity") return get("identity");
      return get("kscale", {{"lambda", lambda}, {"base", base}});
    case InputClass::GGamma:
      if (base == "identity") return get("identity");
      return get("gscale", {{"gamma", gamma}, {"base", base}});
    case InputClass::G:
      if (base == "cayley") return get("ozaki_minus");
      if (base == "halfplane") return get("ozaki_plus");
      return get("identity");
    case InputClass::Identity:
      return get("identity");
  }
  return get("identity");
}

// Arrays Re(z f'/f) and Re(1 + z g''/g') on circles, filled on demand. The
// Cfam pre-Schwarzian is affine in (alpha, beta) in these two quantities, so
// one pair of arrays serves every grid cell.
class PairSamples {
 public:
  struct Arrays {
    std::vector<double> star;
    std::vector<double> conv;
  };

  PairSamples(AnalyticFunction f, AnalyticFunction g) : f_(std::move(f)), g_(std::move(g)) {}

  std::shared_ptr<const Arrays> get(double r, std::size_t m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = cache_[{r, m}];
    if (!slot) {
      auto arrays = std::make_shared<Arrays>();
      arrays->star = sample_circle([this](cplx z) { return starlike_quotient(f_, z); }, r, m);
      arrays->conv = sample_circle([this](cplx z) { return convex_quotient(g_, z); }, r, m);
      slot = std::move(arrays);
    }
    return slot;
  }

  CircleSampler sampler(double alpha, double beta) {
    return [this, alpha, beta](double r, std::size_t m) {
      const auto arrays = get(r, m);
      std::vector<double> out(m);
      const double rest = 1.0 - alpha - beta;
      for (std::size_t j = 0; j < m; ++j) {
        out[j] = alpha * arrays->star[j] + beta * arrays->conv[j] + rest;
      }
      return out;
    };
  }

 private:
  AnalyticFunction f_;
  AnalyticFunction g_;
  std::mutex mu_;
  std::map<std::pair<double, std::size_t>, std::shared_ptr<const Arrays>> cache_;
};

Verdict run_target(TargetClass target, double lambda, double gamma, const CircleSampler& F,
                   const SamplingProfile& prof) {
  switch (target) {
    case TargetClass::K: return test_convex_order(F, 0.0, prof);
    case TargetClass::KLambda: return test_convex_order(F, lambda, prof);
    case TargetClass::GGamma: return test_ozaki(F, gamma, prof);
    case TargetClass::G: return test_ozaki(F, 1.0, prof);
    case TargetClass::C: return test_close_to_convex(F, prof);
  }
  return {};
}

void check_params(const TheoremInfo& t, double lambda, double gamma) {
  if (uses_lambda(t) && !(lambda < 1.0)) {
    throw Error(ErrorCode::BadParam, "theorem " + t.id + " needs lambda < 1");
  }
  if (uses_gamma(t) && !(gamma > 0.0)) {
    throw Error(ErrorCode::BadParam, "theorem " + t.id + " needs gamma > 0");
  }
}

ScanReport run_scan(ScanKind kind, std::string_view id, const Battery& battery, const ScanOptions& opts,
                    const SamplingProfile& prof) {
  const auto started = std::chrono::steady_clock::now();
  const TheoremInfo& info = theorem(id);
  prof.validate();
  if (!(opts.grid.step > 0.0) || opts.grid.alpha_max < opts.grid.alpha_min ||
      opts.grid.beta_max < opts.grid.beta_min) {
    throw Error(ErrorCode::BadParam, "grid needs step > 0 and ordered ranges");
  }
  if (battery.empty()) throw Error(ErrorCode::BadParam, "battery must not be empty");
  const Region region = predicted_region(id, opts.lambda, opts.gamma);

  ScanReport report;
  report.kind = kind;
  report.theorem_id = info.id;
  report.statement = info.statement;
  report.target = info.target;
  report.lambda = opts.lambda;
  report.gamma = opts.gamma;
  report.grid = opts.grid;
  report.band = opts.effective_band();
  report.profile = prof;
  report.redundant = redundant_constraints(region);
  for (const auto& [f, g] : battery) report.pair_names.push_back("(" + f.name() + ", " + g.name() + ")");

  std::vector<std::unique_ptr<PairSamples>> samples;
  for (const auto& [f, g] : battery) samples.push_back(std::make_unique<PairSamples>(f, g));

  const std::size_t na = opts.grid.n_alpha();
  const std::size_t nb = opts.grid.n_beta();
  report.cells.resize(na * nb);

  auto work = [&](std::size_t index) {
    CellResult& cell = report.cells[index];
    cell.j = index / na;
    cell.i = index % na;
    cell.alpha = opts.grid.alpha(cell.i);
    cell.beta = opts.grid.beta(cell.j);
    cell.distance = contains(region, cell.alpha, cell.beta).distance;
    for (std::size_t p = 0; p < samples.size(); ++p) {
      Verdict v = run_target(info.target, opts.lambda, opts.gamma,
                             samples[p]->sampler(cell.alpha, cell.beta), prof);
      cell.combined = p == 0 ? v : merge(cell.combined, v);
      cell.per_pair.push_back(std::move(v));
    }
    if (kind == ScanKind::Inclusion) {
      cell.audited = cell.distance > report.band;
      cell.mismatch = cell.audited && cell.combined.outcome != Outcome::Pass;
    } else {
      cell.audited = cell.distance < -report.band;
      cell.mismatch = cell.audited && cell.combined.outcome != Outcome::Fail;
    }
  };

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    for (std::size_t k = 0; k < report.cells.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t k = next++; k < report.cells.size(); k = next++) work(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = report.cells.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t k = 0; k < report.cells.size(); ++k) {
    if (report.cells[k].mismatch) report.mismatches.push_back(k);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

std::string to_string(TargetClass t) {
  switch (t) {
    case TargetClass::K: return "K";
    case TargetClass::KLambda: return "K(lambda)";
    case TargetClass::GGamma: return "G(gamma)";
    case TargetClass::G: return "G";
    case TargetClass::C: return "C";
  }
  return "?";
}

std::string to_string(ScanKind k) { return k == ScanKind::Inclusion ? "scan" : "sharpness"; }

const std::vector<TheoremInfo>& theorems() { return kTheorems; }

const TheoremInfo& theorem(std::string_view id) {
  for (const TheoremInfo& t : kTheorems) {
    if (t.id == id) return t;
  }
  throw Error(ErrorCode::UnknownTheorem, "no theorem '" + std::string(id) + "'");
}

Region predicted_region(std::string_view id, double lambda, double gamma) {
  const TheoremInfo& info = theorem(id);
  check_params(info, lambda, gamma);
  return Region{info.id, lambda, gamma, build_constraints(id, lambda, gamma)};
}

Containment contains(const Region& region, double alpha, double beta) {
  double distance = kInf;
  for (const Constraint& k : region.constraints) {
    const double norm = std::hypot(k.a, k.b);
    distance = std::min(distance, (k.c - k.a * alpha - k.b * beta) / norm);
  }
  return {distance >= 0.0, distance};
}

std::string pretty(const Region& region) {
  std::ostringstream out;
  out << region.id << '\n';
  for (const Constraint& k : region.constraints) {
    out << "  " << fmt(k.a) << " alpha " << (k.b < 0 ? "- " : "+ ") << fmt(std::abs(k.b))
        << " beta <= " << fmt(k.c) << '\n';
  }
  return out.str();
}

std::vector<std::size_t> redundant_constraints(const Region& region) {
  // Vertices of the polygon cut out by the other constraints, clipped to a
  // large box; constraint k is implied when no vertex violates it.
  constexpr double kBox = 1e4;
  constexpr double kTol = 1e-9;
  std::vector<std::size_t> out;
  const auto& cs = region.constraints;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::vector<Constraint> others{{1, 0, kBox}, {-1, 0, kBox}, {0, 1, kBox}, {0, -1, kBox}};
    for (std::size_t m = 0; m < cs.size(); ++m) {
      if (m != k) others.push_back(cs[m]);
    }
    bool violated = false;
    bool any_vertex = false;
    for (std::size_t p = 0; p < others.size() && !violated; ++p) {
      for (std::size_t q = p + 1; q < others.size() && !violated; ++q) {
        const double det = others[p].a * others[q].b - others[p].b * others[q].a;
        if (std::abs(det) < 1e-14) continue;
        const double x = (others[p].c * others[q].b - others[p].b * others[q].c) / det;
        const double y = (others[p].a * others[q].c - others[p].c * others[q].a) / det;
        const bool feasible = std::all_of(others.begin(), others.end(), [&](const Constraint& o) {
          return o.a * x + o.b * y <= o.c + kTol;
        });
        if (!feasible) continue;
        any_vertex = true;
        if (cs[k].a * x + cs[k].b * y > cs[k].c + kTol) violated = true;
      }
    }
    if (any_vertex && !violated) out.push_back(k);
  }
  return out;
}

namespace {

std::optional<std::pair<double, double>> interval(const Region& region, bool along_alpha, double fixed) {
  double lo = -kInf;
  double hi = kInf;
  for (const Constraint& k : region.constraints) {
    const double coef = along_alpha ? k.a : k.b;
    const double rest = k.c - (along_alpha ? k.b : k.a) * fixed;
    if (coef == 0.0) {
      if (rest < 0.0) return std::nullopt;
    } else if (coef > 0.0) {
      hi = std::min(hi, rest / coef);
    } else {
      lo = std::max(lo, rest / coef);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace

std::optional<std::pair<double, double>> alpha_interval(const Region& region, double beta) {
  return interval(region, true, beta);
}

std::optional<std::pair<double, double>> beta_interval(const Region& region, double alpha) {
  return interval(region, false, alpha);
}

Battery witness_battery(std::string_view id, double lambda, double gamma) {
  const TheoremInfo& info = theorem(id);
  check_params(info, lambda, gamma);
  auto F = [&](const std::string& base) { return member(info.f_class, base, lambda, gamma); };
  auto G = [&](const std::string& base) { return member(info.g_class, base, lambda, gamma); };
  const AnalyticFunction id_fn = get("identity");
  Battery out;
  if (info.g_class == InputClass::Identity) {
    // J-type corollaries: C[f, z] = J_alpha[f].
    if (info.f_class == InputClass::G) {
      out.emplace_back(get("ozaki_plus"), id_fn);
      out.emplace_back(get("ozaki_minus"), id_fn);
    } else {
      out.emplace_back(F("cayley"), id_fn);
    }
    return out;
  }
  if (info.f_class == InputClass::Identity) {
    out.emplace_back(id_fn, G("cayley"));
    return out;
  }
  out.emplace_back(id_fn, G("cayley"));
  if (info.f_class == InputClass::G) {
    out.emplace_back(get("ozaki_plus"), G("cayley"));
    out.emplace_back(get("ozaki_minus"), G("cayley"));
  } else {
    out.emplace_back(F("cayley"), id_fn);
    out.emplace_back(F("cayley"), G("cayley"));
  }
  return out;
}

Battery default_battery(std::string_view id, double lambda, double gamma) {
  const TheoremInfo& info = theorem(id);
  Battery out = witness_battery(id, lambda, gamma);
  auto F = [&](const std::string& base) { return member(info.f_class, base, lambda, gamma); };
  auto G = [&](const std::string& base) { return member(info.g_class, base, lambda, gamma); };
  if (info.g_class == InputClass::Identity) {
    if (info.f_class == InputClass::K) out.emplace_back(F("halfplane"), G("identity"));
    out.emplace_back(F("identity"), G("identity"));
    return out;
  }
  if (info.f_class == InputClass::Identity) {
    out.emplace_back(F("identity"), G("halfplane"));
    return out;
  }
  out.emplace_back(F("halfplane"), G("cayley"));
  out.emplace_back(F("cayley"), G("halfplane"));
  if (info.f_class != InputClass::G) out.emplace_back(F("halfplane"), G("halfplane"));
  return out;
}

std::size_t Grid::n_alpha() const {
  return static_cast<std::size_t>(std::llround((alpha_max - alpha_min) / step)) + 1;
}

std::size_t Grid::n_beta() const {
  return static_cast<std::size_t>(std::llround((beta_max - beta_min) / step)) + 1;
}

ScanReport scan(std::string_view id, const Battery& battery, const ScanOptions& opts,
                const SamplingProfile& prof) {
  return run_scan(ScanKind::Inclusion, id, battery, opts, prof);
}

ScanReport sharpness_check(std::string_view id, const ScanOptions& opts, const SamplingProfile& prof) {
  return run_scan(ScanKind::Sharpness, id, witness_battery(id, opts.lambda, opts.gamma), opts, prof);
}

Verdict classify_pair(TargetClass target, double lambda, double gamma, const AnalyticFunction& f,
                      const AnalyticFunction& g, double alpha, double beta,
                      const SamplingProfile& prof) {
  const CircleSampler F = circle_sampler(
      [&f, &g, alpha, beta](cplx z) { return logderiv_C(alpha, beta, f, g, z); });
  return run_target(target, lambda, gamma, F, prof);
}

ConvexityAudit convexity_audit(const ScanReport& report) {
  ConvexityAudit audit;
  audit.verdict.outcome = Outcome::Pass;
  audit.verdict.margin = 0.0;
  std::vector<std::size_t> ok;
  for (std::size_t k = 0; k < report.cells.size(); ++k) {
    if (report.cells[k].combined.outcome == Outcome::Pass) ok.push_back(k);
  }
  const std::size_t na = report.grid.n_alpha();
  for (std::size_t p = 0; p < ok.size(); ++p) {
    for (std::size_t q = p + 1; q < ok.size(); ++q) {
      const CellResult& a = report.cells[ok[p]];
      const CellResult& b = report.cells[ok[q]];
      if ((a.i + b.i) % 2 != 0 || (a.j + b.j) % 2 != 0) continue;
      const std::size_t mid = ((a.j + b.j) / 2) * na + (a.i + b.i) / 2;
      const CellResult& m = report.cells[mid];
      if (std::abs(m.distance) <= report.band) continue;
      if (m.combined.outcome != Outcome::Pass) audit.offending.push_back({ok[p], ok[q], mid});
    }
  }
  if (!audit.offending.empty()) {
    audit.verdict.outcome = Outcome::Fail;
    audit.verdict.margin = -static_cast<double>(audit.offending.size());
  }
  return audit;
}

}  // namespace hornich
