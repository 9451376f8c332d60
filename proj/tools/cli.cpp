#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "hornich/acceptance.hpp"
#include "hornich/catalog.hpp"
#include "hornich/criteria.hpp"
#include "hornich/error.hpp"
#include "hornich/operators.hpp"
#include "hornich/regions.hpp"
#include "hornich/report.hpp"

namespace hornich::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct ProfileFlags {
  std::string path;
  std::string radii;
  std::string sharp_radii;
  std::optional<std::size_t> M;
  std::optional<double> eps;
  std::optional<double> band;
  std::optional<unsigned> threads;
};

struct OperatorFlags {
  std::string family = "C";
  double alpha = 0.0;
  double beta = 0.0;
  std::string f = "identity";
  std::string g = "identity";
};

struct Options {
  ProfileFlags profile;
  OperatorFlags op;
  std::string cls;
  double lambda = 0.5;
  double gamma = 1.0;
  std::size_t coeffs = 8;
  std::string theorem;
  std::string grid;
  double scan_band = 0.0;
  std::string battery = "default";
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string radius_list;
};

void add_profile_flags(CLI::App* sub, ProfileFlags& p) {
  sub->add_option("--profile", p.path, "sampling profile file (key=value lines)");
  sub->add_option("--radii", p.radii, "comma-separated radii");
  sub->add_option("--sharp-radii", p.sharp_radii, "comma-separated sharp radii");
  sub->add_option("--M", p.M, "angular samples per circle");
  sub->add_option("--eps", p.eps, "strict-inequality tolerance");
  sub->add_option("--band", p.band, "refinement band");
  sub->add_option("--threads", p.threads, "worker threads (default $HORNICH_LAB_THREADS or 1)");
}

void add_operator_flags(CLI::App* sub, OperatorFlags& o) {
  sub->add_option("--family", o.family, "C, I, J, alexander, sum or scale")->capture_default_str();
  sub->add_option("--alpha", o.alpha, "first exponent")->capture_default_str();
  sub->add_option("--beta", o.beta, "second exponent")->capture_default_str();
  sub->add_option("--f", o.f, "first function, e.g. cayley or b(alpha=-3)")->capture_default_str();
  sub->add_option("--g", o.g, "second function")->capture_default_str();
}

// Defaults < profile file < flags.
SamplingProfile build_profile(const ProfileFlags& p) {
  SamplingProfile prof;
  if (!p.path.empty()) prof = load_profile(p.path, prof);
  std::string overrides;
  if (!p.radii.empty()) overrides += "radii=" + p.radii + "\n";
  if (!p.sharp_radii.empty()) overrides += "sharp_radii=" + p.sharp_radii + "\n";
  prof = parse_profile(overrides, prof);
  if (p.M) prof.M = *p.M;
  if (p.eps) prof.eps = *p.eps;
  if (p.band) prof.band = *p.band;
  prof.validate();
  return prof;
}

unsigned thread_count(const ProfileFlags& p) {
  if (p.threads) return std::max(1u, *p.threads);
  if (const char* env = std::getenv("HORNICH_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw Error(ErrorCode::BadParam, "HORNICH_LAB_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0') {
      throw Error(ErrorCode::BadParam, std::string("bad number '") + item + "' in " + what);
    }
    out.push_back(v);
  }
  return out;
}

std::string complex_text(cplx v) {
  const double re = v.real() + 0.0;
  const double im = v.imag() + 0.0;
  if (im == 0.0) return format_number(re);
  return format_number(re) + (im < 0 ? "-" : "+") + format_number(std::abs(im)) + "i";
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "verdict: " << to_string(v.outcome) << '\n' << "margin: " << format_number(v.margin) << '\n';
  if (v.witness) {
    out << "witness: r=" << format_number(v.witness->r) << " theta=" << format_number(v.witness->theta);
    if (v.witness->theta_end != v.witness->theta) out << ".." << format_number(v.witness->theta_end);
    out << " value=" << format_number(v.witness->value) << '\n';
  }
}

std::string operator_label(const OperatorSpec& spec, const AnalyticFunction& f, const AnalyticFunction& g) {
  return to_string(spec.family) + "_{" + format_number(spec.alpha) + "," + format_number(spec.beta) + "}[" +
         f.name() + ", " + g.name() + "]";
}

int do_classify(const Options& o, std::ostream& out) {
  const SamplingProfile prof = build_profile(o.profile);
  const OperatorSpec spec = make_spec(parse_family(o.op.family), o.op.alpha, o.op.beta);
  const AnalyticFunction f = parse_function(o.op.f);
  const AnalyticFunction g = parse_function(o.op.g);
  const CircleSampler F = circle_sampler([&](cplx z) { return logderiv(spec, f, g, z); });
  Verdict v;
  std::string cls;
  if (o.cls == "K") {
    v = test_convex_order(F, 0.0, prof);
    cls = "K";
  } else if (o.cls == "Kl" || o.cls == "K(lambda)") {
    v = test_convex_order(F, o.lambda, prof);
    cls = "K(" + format_number(o.lambda) + ")";
  } else if (o.cls == "G") {
    v = test_ozaki(F, 1.0, prof);
    cls = "G";
  } else if (o.cls == "Gg" || o.cls == "G(gamma)") {
    v = test_ozaki(F, o.gamma, prof);
    cls = "G(" + format_number(o.gamma) + ")";
  } else if (o.cls == "C") {
    v = test_close_to_convex(F, prof);
    cls = "C";
  } else {
    throw Error(ErrorCode::BadParam, "unknown class '" + o.cls + "' (K, Kl, G, Gg or C)");
  }
  out << "operator: " << operator_label(spec, f, g) << '\n' << "class: " << cls << '\n';
  print_verdict(out, v);
  return kOk;
}

int do_op_eval(const Options& o, std::ostream& out) {
  const OperatorSpec spec = make_spec(parse_family(o.op.family), o.op.alpha, o.op.beta);
  const AnalyticFunction f = parse_function(o.op.f);
  const AnalyticFunction g = parse_function(o.op.g);
  if (o.coeffs < 2 || o.coeffs > Series::kMaxOrder) {
    throw Error(ErrorCode::BadParam, "--coeffs must lie in [2, 8192]");
  }
  const std::size_t n = std::max(o.coeffs, Series::kDefaultOrder);
  const Series s = apply_family(spec, f, g, n);
  out << "operator: " << operator_label(spec, f, g) << '\n' << "coefficients: ";
  for (std::size_t k = 0; k < o.coeffs; ++k) out << (k ? ", " : "") << complex_text(s[k]);
  out << '\n' << "samples (order " << n << "):\n";
  for (int q = 0; q < 4; ++q) {
    const cplx z = std::polar(0.5, q * std::numbers::pi / 2.0);
    const Evaluation e = evaluate(s, z);
    out << "  z=" << complex_text(z) << "  F=" << complex_text(e.value)
        << "  tail<=" << format_number(e.tail_bound)
        << "  1+zF''/F'=" << complex_text(logderiv(spec, f, g, z)) << '\n';
  }
  return kOk;
}

Grid parse_grid(const std::string& text) {
  Grid grid;
  if (text.empty()) return grid;
  const auto v = parse_numbers(text, "--grid");
  if (v.size() != 5) throw Error(ErrorCode::BadParam, "--grid takes alpha_min,alpha_max,beta_min,beta_max,step");
  grid = {v[0], v[1], v[2], v[3], v[4]};
  return grid;
}

int do_region(ScanKind kind, const Options& o, std::ostream& out, std::ostream& err) {
  const SamplingProfile prof = build_profile(o.profile);
  ScanOptions so;
  so.grid = parse_grid(o.grid);
  so.band = o.scan_band;
  so.threads = thread_count(o.profile);
  so.lambda = o.lambda;
  so.gamma = o.gamma;
  const Region region = predicted_region(o.theorem, o.lambda, o.gamma);
  ScanReport report;
  if (kind == ScanKind::Inclusion) {
    Battery battery;
    if (o.battery == "default") {
      battery = default_battery(o.theorem, o.lambda, o.gamma);
    } else if (o.battery == "witness") {
      battery = witness_battery(o.theorem, o.lambda, o.gamma);
    } else {
      throw Error(ErrorCode::BadParam, "--battery must be default or witness");
    }
    report = scan(o.theorem, battery, so, prof);
  } else {
    report = sharpness_check(o.theorem, so, prof);
  }
  report.seed = o.seed;

  out << "theorem: " << report.theorem_id << '\n'
      << "statement: " << report.statement << '\n'
      << "target: " << to_string(report.target) << '\n'
      << "region:\n";
  std::istringstream lines(pretty(region));
  std::string line;
  std::getline(lines, line);  // id
  while (std::getline(lines, line)) out << line << '\n';
  out << "redundant constraints:";
  if (report.redundant.empty()) out << " none";
  for (std::size_t k : report.redundant) out << ' ' << k;
  out << '\n'
      << "grid: alpha [" << format_number(so.grid.alpha_min) << ", " << format_number(so.grid.alpha_max)
      << "] beta [" << format_number(so.grid.beta_min) << ", " << format_number(so.grid.beta_max) << "] step "
      << format_number(so.grid.step) << " (" << so.grid.n_alpha() << " x " << so.grid.n_beta() << ")\n"
      << "band: " << format_number(report.band) << '\n'
      << "seed: " << report.seed << '\n'
      << "pairs:";
  for (const std::string& p : report.pair_names) out << ' ' << p;
  out << '\n';
  std::size_t audited = 0;
  for (const CellResult& c : report.cells) audited += c.audited ? 1 : 0;
  out << "audited cells: " << audited << '\n' << "mismatches: " << report.mismatches.size() << '\n';
  for (std::size_t k : report.mismatches) {
    const CellResult& c = report.cells[k];
    out << "  (" << format_number(c.alpha) << ", " << format_number(c.beta) << ") "
        << to_string(c.combined.outcome) << " margin " << format_number(c.combined.margin) << '\n';
  }
  bool ok = report.mismatches.empty();
  if (kind == ScanKind::Inclusion) {
    const ConvexityAudit audit = convexity_audit(report);
    out << "convexity audit: " << to_string(audit.verdict.outcome) << '\n';
    ok = ok && audit.verdict.outcome == Outcome::Pass;
  }
  if (!o.out_path.empty()) {
    write_report(report, parse_format(o.format), o.out_path);
    out << "wrote: " << o.out_path << '\n';
  }
  err << "elapsed: " << format_number(std::round(report.elapsed_seconds * 100) / 100) << " s\n";
  return ok ? kOk : kVerificationFailed;
}

int do_kaplan(const Options& o, std::ostream& out) {
  SamplingProfile prof = build_profile(o.profile);
  const AnalyticFunction f = parse_function(o.op.f);
  if (!o.radius_list.empty()) {
    std::vector<double> rs = parse_numbers(o.radius_list, "--r");
    std::sort(rs.begin(), rs.end());
    prof.radii = rs;
    prof.sharp_radii.clear();
    prof.validate();
  }
  const CircleSampler F = circle_sampler([&f](cplx z) { return convex_quotient(f, z); });
  out << "function: " << f.name() << '\n';
  for (double r : prof.all_radii()) {
    const std::size_t m = samples_for_radius(prof, r);
    const double v = min_arc_integral(F(r, m));
    out << "r=" << format_number(r) << " M=" << m << " min_arc=" << format_number(v)
        << " margin=" << format_number(v + std::numbers::pi) << '\n';
  }
  print_verdict(out, test_close_to_convex(F, prof));
  return kOk;
}

int do_verify_all(const Options& o, std::ostream& out) {
  AcceptanceOptions ao;
  ao.profile = build_profile(o.profile);
  ao.threads = thread_count(o.profile);
  ao.seed = o.seed;
  out << "seed: " << ao.seed << '\n';
  int failed = 0;
  run_acceptance(ao, [&](const CriterionResult& r) {
    if (!r.passed) ++failed;
    out << format_result(r) << std::endl;
  });
  out << "acceptance: " << (failed ? "FAIL" : "PASS") << " (" << 10 - failed << "/10)\n";
  return failed ? kVerificationFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical workbench for Hornich-type integral operators on the unit disk", "hornich-lab"};
  app.require_subcommand(1, 1);
  Options o;

  auto* classify = app.add_subcommand("classify", "test C_{alpha,beta}[f,g] for membership in a class");
  add_operator_flags(classify, o.op);
  add_profile_flags(classify, o.profile);
  classify->add_option("--class", o.cls, "K, Kl, G, Gg or C")->required();
  classify->add_option("--lambda", o.lambda, "order for Kl")->capture_default_str();
  classify->add_option("--gamma", o.gamma, "parameter for Gg")->capture_default_str();

  auto* op_eval = app.add_subcommand("op-eval", "print coefficients and samples of an operator");
  add_operator_flags(op_eval, o.op);
  op_eval->add_option("--coeffs", o.coeffs, "number of coefficients to print")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "inclusion scan of a theorem's region");
  auto* sharp_cmd = app.add_subcommand("sharpness", "sharpness check outside a theorem's region");
  for (auto* sub : {scan_cmd, sharp_cmd}) {
    sub->add_option("--theorem", o.theorem, "theorem id, e.g. KK-K")->required();
    sub->add_option("--lambda", o.lambda, "lambda < 1")->capture_default_str();
    sub->add_option("--gamma", o.gamma, "gamma > 0")->capture_default_str();
    sub->add_option("--grid", o.grid, "alpha_min,alpha_max,beta_min,beta_max,step");
    sub->add_option("--scan-band", o.scan_band, "exemption band around the boundary (default: step)");
    sub->add_option("--out", o.out_path, "report file");
    sub->add_option("--format", o.format, "json, csv or pgm")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed recorded in the report")->capture_default_str();
    add_profile_flags(sub, o.profile);
  }
  scan_cmd->add_option("--battery", o.battery, "default or witness")->capture_default_str();

  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  add_profile_flags(verify, o.profile);
  verify->add_option("--seed", o.seed, "seed of the randomized batteries")->capture_default_str();

  auto* kaplan = app.add_subcommand("kaplan", "minimum Kaplan arc integral per radius");
  kaplan->add_option("--f", o.op.f, "function")->required();
  kaplan->add_option("--r", o.radius_list, "comma-separated radii (default: profile radii)");
  add_profile_flags(kaplan, o.profile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return do_classify(o, out);
    if (*op_eval) return do_op_eval(o, out);
    if (*scan_cmd) return do_region(ScanKind::Inclusion, o, out, err);
    if (*sharp_cmd) return do_region(ScanKind::Sharpness, o, out, err);
    if (*kaplan) return do_kaplan(o, out);
    if (*verify) return do_verify_all(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? kNumerical : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hornich::cli
