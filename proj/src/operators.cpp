#include "hornich/operators.hpp"

#include <cmath>

#include "hornich/error.hpp"

namespace hornich {
namespace {

constexpr double kSingularTolerance = 1e-13;

Series derivative_of(const AnalyticFunction& fn, std::size_t n) {
  return differentiate(fn.series(n + 1));
}

Series quotient_of(const AnalyticFunction& fn, std::size_t n) {
  return fn.series(n + 1).shifted_down();
}

}  // namespace

OperatorSpec make_spec(Family family, double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::BadParam, "operator exponents must be finite reals");
  }
  return {family, alpha, beta};
}

Family parse_family(std::string_view name) {
  if (name == "C" || name == "c") return Family::Cfam;
  if (name == "I" || name == "i") return Family::Ifam;
  if (name == "J" || name == "j") return Family::Jfam;
  if (name == "alexander") return Family::Alexander;
  if (name == "sum") return Family::HornichSum;
  if (name == "scale") return Family::HornichScale;
  throw Error(ErrorCode::BadParam, "unknown operator family '" + std::string(name) + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::HornichSum: return "sum";
    case Family::HornichScale: return "scale";
    case Family::Alexander: return "alexander";
    case Family::Ifam: return "I";
    case Family::Jfam: return "J";
    case Family::Cfam: return "C";
  }
  return "?";
}

Series hornich_sum(const Series& f, const Series& g) {
  return antidifferentiate(mul(differentiate(f), differentiate(g)));
}

Series hornich_scale(double t, const Series& g) {
  return antidifferentiate(pow_real(differentiate(g), t));
}

Series apply_family(const OperatorSpec& spec, const AnalyticFunction& f, const AnalyticFunction& g,
                    std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParam, "operator series needs order >= 2");
  Series integrand = Series::constant(1.0, n);
  switch (spec.family) {
    case Family::HornichSum:
      integrand = mul(derivative_of(f, n), derivative_of(g, n));
      break;
    case Family::HornichScale:
      integrand = pow_real(derivative_of(f, n), spec.alpha);
      break;
    case Family::Alexander:
      integrand = quotient_of(f, n);
      break;
    case Family::Ifam:
      integrand = mul(pow_real(derivative_of(f, n), spec.alpha),
                      pow_real(derivative_of(g, n), spec.beta));
      break;
    case Family::Jfam:
      integrand = mul(pow_real(quotient_of(f, n), spec.alpha),
                      pow_real(quotient_of(g, n), spec.beta));
      break;
    case Family::Cfam:
      integrand = mul(pow_real(quotient_of(f, n), spec.alpha),
                      pow_real(derivative_of(g, n), spec.beta));
      break;
  }
  return antidifferentiate(integrand).truncated(n);
}

cplx starlike_quotient(const AnalyticFunction& f, cplx z) {
  if (z == cplx{}) return 1.0;
  const Jet j = f.eval012(z);
  if (std::abs(j.f) < kSingularTolerance) {
    throw Error(ErrorCode::SingularPoint, f.name() + " vanishes near the sample point");
  }
  return z * j.df / j.f;
}

cplx convex_quotient(const AnalyticFunction& f, cplx z) {
  const Jet j = f.eval012(z);
  if (std::abs(j.df) < kSingularTolerance) {
    throw Error(ErrorCode::SingularPoint, "derivative of " + f.name() + " vanishes near the sample point");
  }
  return 1.0 + z * j.d2f / j.df;
}

cplx logderiv(const OperatorSpec& spec, const AnalyticFunction& f, const AnalyticFunction& g,
              cplx z) {
  if (z == cplx{}) return 1.0;
  const double a = spec.alpha;
  const double b = spec.beta;
  switch (spec.family) {
    case Family::HornichSum:
      return convex_quotient(f, z) + convex_quotient(g, z) - 1.0;
    case Family::HornichScale:
      return a * convex_quotient(f, z) + (1.0 - a);
    case Family::Alexander:
      return starlike_quotient(f, z);
    case Family::Ifam:
      return a * convex_quotient(f, z) + b * convex_quotient(g, z) + (1.0 - a - b);
    case Family::Jfam:
      return a * starlike_quotient(f, z) + b * starlike_quotient(g, z) + (1.0 - a - b);
    case Family::Cfam:
      return a * starlike_quotient(f, z) + b * convex_quotient(g, z) + (1.0 - a - b);
  }
  return 1.0;
}

cplx logderiv_C(double alpha, double beta, const AnalyticFunction& f, const AnalyticFunction& g,
                cplx z) {
  return logderiv(make_spec(Family::Cfam, alpha, beta), f, g, z);
}

cplx series_logderiv(const Series& s, cplx z) {
  const Series d1 = differentiate(s);
  const Series d2 = differentiate(d1);
  const cplx v1 = evaluate(d1, z).value;
  if (std::abs(v1) < kSingularTolerance) {
    throw Error(ErrorCode::SingularPoint, "series derivative vanishes at the sample point");
  }
  return 1.0 + z * evaluate(d2, z).value / v1;
}

}  // namespace hornich
