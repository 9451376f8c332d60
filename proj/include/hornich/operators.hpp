#pragma once

#include <string>
#include <string_view>

#include "hornich/catalog.hpp"
#include "hornich/series.hpp"

namespace hornich {

// Operator families built from the Hornich operations. Integrands:
//   HornichSum    f'(w) g'(w)
//   HornichScale  (f'(w))^alpha                    (alpha * f)
//   Alexander     f(w)/w
//   Ifam          (f'(w))^alpha (g'(w))^beta
//   Jfam          (f(w)/w)^alpha (g(w)/w)^beta
//   Cfam          (f(w)/w)^alpha (g'(w))^beta
// Every fractional power is taken on the branch equal to 1 at the origin.
enum class Family { HornichSum, HornichScale, Alexander, Ifam, Jfam, Cfam };

struct OperatorSpec {
  Family family = Family::Cfam;
  double alpha = 0.0;
  double beta = 0.0;
};

OperatorSpec make_spec(Family family, double alpha, double beta);
Family parse_family(std::string_view name);
std::string to_string(Family family);

Series hornich_sum(const Series& f, const Series& g);
Series hornich_scale(double t, const Series& g);

// Order-n series of the transformed function.
Series apply_family(const OperatorSpec& spec, const AnalyticFunction& f, const AnalyticFunction& g,
                    std::size_t n);

// Building blocks of every pre-Schwarzian combination.
cplx starlike_quotient(const AnalyticFunction& f, cplx z);  // z f'/f
cplx convex_quotient(const AnalyticFunction& f, cplx z);    // 1 + z f''/f'

// 1 + z F''/F' for F = the family's operator applied to (f, g), from closed
// forms of f and g. For Cfam this is
//   alpha * z f'/f + beta * (1 + z g''/g') + (1 - alpha - beta).
// Returns 1 at z = 0. Throws SingularPoint when |f(z)| or |f'(z)| (or the
// corresponding value of g) drops below 1e-13.
cplx logderiv(const OperatorSpec& spec, const AnalyticFunction& f, const AnalyticFunction& g,
              cplx z);
cplx logderiv_C(double alpha, double beta, const AnalyticFunction& f, const AnalyticFunction& g,
                cplx z);

// 1 + z F''/F' from a materialized series (numerically differentiated twice).
cplx series_logderiv(const Series& s, cplx z);

}  // namespace hornich
