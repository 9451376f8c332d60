#include "hornich/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

#include "hornich/error.hpp"

namespace hornich {
namespace {

// Below this radius f is summed from its Taylor coefficients; the closed form
// ((1+sz)^{q+1} - 1)/(s(q+1)) cancels badly near the origin.
constexpr double kSeriesRadius = 0.25;
constexpr std::size_t kSeriesTerms = 64;

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

// Coefficients d_k of (1 + s z)^q.
std::vector<double> binomial_coeffs(double s, double q, std::size_t n) {
  std::vector<double> d(n);
  if (n == 0) return d;
  d[0] = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d[k + 1] = d[k] * (q - static_cast<double>(k)) / static_cast<double>(k + 1) * s;
  }
  return d;
}

Jet binomial_jet(const AnalyticFunction::BinomialDerivative& b, cplx z) {
  const double s = b.sign;
  const double q = b.power;
  const cplx u = 1.0 + s * z;
  Jet j;
  if (q == 0.0) {
    j.df = 1.0;
    j.d2f = 0.0;
  } else {
    j.df = std::pow(u, q);
    j.d2f = q * s * std::pow(u, q - 1.0);
  }
  if (std::abs(z) < kSeriesRadius) {
    const std::vector<double> d = binomial_coeffs(s, q, kSeriesTerms);
    cplx acc{};
    for (std::size_t k = kSeriesTerms; k-- > 0;) acc = acc * z + d[k] / static_cast<double>(k + 1);
    j.f = acc * z;
  } else if (near(q, -1.0)) {
    j.f = std::log(u) / s;
  } else {
    j.f = (u * j.df - 1.0) / (s * (q + 1.0));
  }
  return j;
}

Jet koebe_jet(cplx z) {
  const cplx w = 1.0 - z;
  const cplx w2 = w * w;
  return {z / w2, (1.0 + z) / (w2 * w), (4.0 + 2.0 * z) / (w2 * w2)};
}

double real_param(const ParamMap& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::BadParam, "missing parameter '" + std::string(key) + "'");
  }
  if (const double* v = std::get_if<double>(&it->second)) return *v;
  throw Error(ErrorCode::BadParam, "parameter '" + std::string(key) + "' must be a number");
}

std::string name_param(const ParamMap& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::BadParam, "missing parameter '" + std::string(key) + "'");
  }
  if (const std::string* v = std::get_if<std::string>(&it->second)) return *v;
  throw Error(ErrorCode::BadParam, "parameter '" + std::string(key) + "' must be a catalog name");
}

void expect_keys(std::string_view name, const ParamMap& params, std::set<std::string_view> allowed) {
  for (const auto& [key, value] : params) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::BadParam,
                  "unexpected parameter '" + key + "' for " + std::string(name));
    }
  }
}

std::string canonical(std::string_view name, const ParamMap& params) {
  if (params.empty()) return std::string(name);
  std::string out(name);
  out += '(';
  bool first = true;
  auto append = [&](const std::string& key, const ParamValue& v) {
    if (!first) out += ',';
    first = false;
    out += key + "=";
    if (const double* d = std::get_if<double>(&v)) {
      out += format_number(*d);
    } else {
      out += std::get<std::string>(v);
    }
  };
  // Real parameters first, then names, so kscale reads lambda=..,base=..
  for (const auto& [k, v] : params) {
    if (std::holds_alternative<double>(v)) append(k, v);
  }
  for (const auto& [k, v] : params) {
    if (std::holds_alternative<std::string>(v)) append(k, v);
  }
  out += ')';
  return out;
}

using Binomial = AnalyticFunction::BinomialDerivative;

std::vector<ClassTag> convex_tags(Provenance p) {
  return {{ClassId::K, 0.0, p}, {ClassId::KLambda, 0.0, p}, {ClassId::C, 0.0, Provenance::Derived},
          {ClassId::Starlike, 0.0, Provenance::Derived}};
}

AnalyticFunction scaled_entry(std::string_view name, const ParamMap& params, double t,
                              const AnalyticFunction& base, ClassTag claimed) {
  const Binomial* b = base.binomial();
  if (!b) {
    throw Error(ErrorCode::BadParam, "base '" + base.name() + "' has no closed-form Hornich scaling");
  }
  std::vector<ClassTag> tags;
  if (base.has_tag(ClassId::K)) {
    tags.push_back(claimed);
    if (claimed.cls == ClassId::KLambda) {
      if (claimed.param >= 0.0) tags.push_back({ClassId::K, 0.0, Provenance::Derived});
      if (claimed.param >= -0.5) tags.push_back({ClassId::C, 0.0, Provenance::Derived});
    }
  }
  return AnalyticFunction(canonical(name, params), params, Binomial{b->sign, b->power * t},
                          std::move(tags));
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

AnalyticFunction::AnalyticFunction(std::string name, ParamMap params, Shape shape,
                                   std::vector<ClassTag> tags)
    : name_(std::move(name)), params_(std::move(params)), shape_(shape), tags_(std::move(tags)) {}

bool AnalyticFunction::has_tag(ClassId cls) const {
  return std::any_of(tags_.begin(), tags_.end(), [cls](const ClassTag& t) { return t.cls == cls; });
}

Jet AnalyticFunction::eval012(cplx z) const {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::OutsideDisk, "closed forms need |z| < 1");
  if (const Binomial* b = binomial()) return binomial_jet(*b, z);
  return koebe_jet(z);
}

Series AnalyticFunction::series(std::size_t n) const {
  if (n < 2) throw Error(ErrorCode::BadParam, "series needs order >= 2");
  if (std::holds_alternative<Koebe>(shape_)) {
    std::vector<cplx> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = static_cast<double>(k);
    return Series(std::move(c));
  }
  const Binomial& b = *binomial();
  const std::size_t m = std::max<std::size_t>(n - 1, 2);
  if (name_.rfind("b(", 0) == 0) {
    return antidifferentiate(pow_real(Series::linear(1.0, 1.0, m), b.power)).truncated(n);
  }
  const std::vector<double> d = binomial_coeffs(b.sign, b.power, m);
  std::vector<cplx> dc(d.begin(), d.end());
  return antidifferentiate(Series(std::move(dc))).truncated(n);
}

AnalyticFunction get(std::string_view name, const ParamMap& params) {
  if (name == "identity") {
    expect_keys(name, params, {});
    std::vector<ClassTag> tags = convex_tags(Provenance::Derived);
    tags[1].param = 1.0;  // in K(lambda) for every lambda < 1
    tags.push_back({ClassId::GGamma, 0.0, Provenance::Derived});
    return AnalyticFunction("identity", {}, Binomial{1.0, 0.0}, std::move(tags));
  }
  if (name == "cayley") {
    expect_keys(name, params, {});
    return AnalyticFunction("cayley", {}, Binomial{1.0, -2.0}, convex_tags(Provenance::Claimed));
  }
  if (name == "halfplane") {
    expect_keys(name, params, {});
    return AnalyticFunction("halfplane", {}, Binomial{-1.0, -2.0}, convex_tags(Provenance::Derived));
  }
  if (name == "koebe") {
    expect_keys(name, params, {});
    return AnalyticFunction("koebe", {}, AnalyticFunction::Koebe{},
                            {{ClassId::Starlike, 0.0, Provenance::Derived}});
  }
  if (name == "ozaki_plus" || name == "ozaki_minus") {
    expect_keys(name, params, {});
    const double s = name == "ozaki_plus" ? -1.0 : 1.0;
    return AnalyticFunction(std::string(name), {}, Binomial{s, 1.0},
                            {{ClassId::GGamma, 1.0, Provenance::Claimed},
                             {ClassId::Starlike, 0.0, Provenance::Derived}});
  }
  if (name == "b") {
    expect_keys(name, params, {"alpha"});
    const double alpha = real_param(params, "alpha");
    if (!std::isfinite(alpha)) throw Error(ErrorCode::BadParam, "alpha must be finite");
    std::vector<ClassTag> tags;
    if (alpha >= -2.0 && alpha <= 0.0) tags.push_back({ClassId::K, 0.0, Provenance::Claimed});
    if (alpha >= -3.0 && alpha <= 1.0) tags.push_back({ClassId::C, 0.0, Provenance::Claimed});
    return AnalyticFunction(canonical(name, params), params, Binomial{1.0, alpha}, std::move(tags));
  }
  if (name == "kscale") {
    expect_keys(name, params, {"lambda", "base"});
    const double lambda = real_param(params, "lambda");
    if (!(lambda < 1.0)) throw Error(ErrorCode::BadParam, "kscale needs lambda < 1");
    const AnalyticFunction base = get(name_param(params, "base"));
    return scaled_entry(name, params, 1.0 - lambda, base,
                        {ClassId::KLambda, lambda, Provenance::Claimed});
  }
  if (name == "gscale") {
    expect_keys(name, params, {"gamma", "base"});
    const double gamma = real_param(params, "gamma");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
      throw Error(ErrorCode::BadParam, "gscale needs gamma > 0");
    }
    const AnalyticFunction base = get(name_param(params, "base"));
    return scaled_entry(name, params, -gamma / 2.0, base,
                        {ClassId::GGamma, gamma, Provenance::Claimed});
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry '" + std::string(name) + "'");
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  AnalyticFunction parse() {
    skip_ws();
    const std::string name = identifier("function name");
    ParamMap params;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      if (peek() == ')') fail("expected parameter");
      while (true) {
        skip_ws();
        const std::string key = identifier("parameter name");
        skip_ws();
        expect('=');
        skip_ws();
        ParamValue value = this->value();
        if (params.count(key)) fail("duplicate parameter '" + key + "'");
        params.emplace(key, std::move(value));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return get(name, params);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                "at position " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + msg);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier(const char* what) {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail(std::string("expected ") + what);
    }
    while (ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ParamValue value() {
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier("value");
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected number or name");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AnalyticFunction parse_function(std::string_view text) { return SpecParser(text).parse(); }

Jet eval012(const AnalyticFunction& fn, cplx z) { return fn.eval012(z); }

Series coefficients(const AnalyticFunction& fn, std::size_t n) { return fn.series(n); }

AnalyticFunction hornich_scaled(double t, const AnalyticFunction& fn) {
  const auto* b = fn.binomial();
  if (!b) throw Error(ErrorCode::BadParam, "'" + fn.name() + "' has no closed-form Hornich scaling");
  return AnalyticFunction("(" + format_number(t) + ")*" + fn.name(), {},
                          AnalyticFunction::BinomialDerivative{b->sign, b->power * t}, {});
}

std::vector<std::string> catalog_names() {
  return {"identity", "cayley", "halfplane", "koebe", "b", "ozaki_plus", "ozaki_minus",
          "kscale", "gscale"};
}

}  // namespace hornich
