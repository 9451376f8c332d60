#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hornich/series.hpp"

namespace hornich {

enum class ClassId {
  K,         // convex
  KLambda,   // convex of order lambda
  GGamma,    // Ozaki-type class G(gamma); G itself is G(1)
  C,         // close-to-convex
  Starlike,
};

enum class Provenance { Claimed, Derived };

// A class membership carried by a catalog entry. For KLambda the tag holds
// for every order below `param` (the entry is in K(lambda) for lambda < param,
// inclusive when Claimed from a scaling lemma); for GGamma it holds for every
// gamma >= param. K, C and Starlike ignore `param`.
struct ClassTag {
  ClassId cls;
  double param = 0.0;
  Provenance provenance = Provenance::Derived;
};

// (f(z), f'(z), f''(z)).
struct Jet {
  cplx f;
  cplx df;
  cplx d2f;
};

using ParamValue = std::variant<double, std::string>;
using ParamMap = std::map<std::string, ParamValue, std::less<>>;

// Normalized analytic function of the unit disk with closed-form evaluators.
//
// Two shapes cover the whole catalog:
//   binomial derivative  f'(z) = (1 + s z)^q,  s = +-1
//   Koebe                f(z)  = z / (1 - z)^2
// Since Re(1 + s z) > 0 on the disk, the principal power is analytic there and
// equals the branch with value 1 at the origin.
class AnalyticFunction {
 public:
  struct BinomialDerivative {
    double sign;
    double power;
  };
  struct Koebe {};
  using Shape = std::variant<BinomialDerivative, Koebe>;

  AnalyticFunction(std::string name, ParamMap params, Shape shape, std::vector<ClassTag> tags);

  const std::string& name() const noexcept { return name_; }
  const ParamMap& params() const noexcept { return params_; }
  const Shape& shape() const noexcept { return shape_; }
  const std::vector<ClassTag>& tags() const noexcept { return tags_; }

  bool has_tag(ClassId cls) const;
  const BinomialDerivative* binomial() const { return std::get_if<BinomialDerivative>(&shape_); }

  // Closed forms; throws OutsideDisk for |z| >= 1.
  Jet eval012(cplx z) const;
  cplx eval0(cplx z) const { return eval012(z).f; }
  cplx eval1(cplx z) const { return eval012(z).df; }

  // First n Taylor coefficients. For b(alpha) this goes through
  // antidifferentiate(pow_real(1+z, alpha)); the other entries use their
  // binomial or Koebe coefficient formulas.
  Series series(std::size_t n) const;

 private:
  std::string name_;
  ParamMap params_;
  Shape shape_;
  std::vector<ClassTag> tags_;
};

// Catalog lookup. Names: identity, cayley, halfplane, koebe, b(alpha),
// ozaki_plus, ozaki_minus, kscale(lambda, base), gscale(gamma, base).
AnalyticFunction get(std::string_view name, const ParamMap& params = {});

// Mini-grammar `name` or `name(key=value,...)`, e.g. `b(alpha=-3)` or
// `kscale(lambda=0.5,base=halfplane)`. Parse errors carry the offending
// character position.
AnalyticFunction parse_function(std::string_view text);

Jet eval012(const AnalyticFunction& fn, cplx z);
Series coefficients(const AnalyticFunction& fn, std::size_t n);

// t * fn in the Hornich sense, i.e. (f')^t integrated; only for binomial
// shapes, where the result stays in closed form.
AnalyticFunction hornich_scaled(double t, const AnalyticFunction& fn);

std::vector<std::string> catalog_names();

std::string format_number(double x);

}  // namespace hornich
