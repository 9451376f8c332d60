#include "hornich/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hornich/error.hpp"

namespace hornich {
namespace {

constexpr double kConstantTolerance = 1e-12;
constexpr double kDivisorTolerance = 1e-14;

Series checked(std::vector<cplx> coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const cplx& c = coeffs[k];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) ||
        std::abs(c) > Series::kOverflowLimit) {
      throw Error(ErrorCode::Overflow,
                  "coefficient " + std::to_string(k) + " exceeds 1e150 or is not finite");
    }
  }
  return Series(std::move(coeffs));
}

std::size_t common_order(const Series& a, const Series& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

Series::Series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw Error(ErrorCode::BadParam, "series order must be at least 2");
  }
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::Overflow, "non-finite series coefficient");
    }
  }
}

Series Series::zero(std::size_t order) { return Series(std::vector<cplx>(order)); }

Series Series::constant(cplx value, std::size_t order) {
  std::vector<cplx> c(order);
  c[0] = value;
  return Series(std::move(c));
}

Series Series::linear(cplx c0, cplx c1, std::size_t order) {
  std::vector<cplx> c(order);
  c[0] = c0;
  c[1] = c1;
  return Series(std::move(c));
}

Series Series::monomial(std::size_t k, std::size_t order) {
  std::vector<cplx> c(order);
  if (k < order) c[k] = 1.0;
  return Series(std::move(c));
}

Series Series::truncated(std::size_t order) const {
  if (order >= coeffs_.size()) return *this;
  return Series(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

Series Series::shifted_down() const {
  if (std::abs(coeffs_[0]) > kConstantTolerance) {
    throw Error(ErrorCode::NotZeroConstant, "f(z)/z needs f(0) = 0");
  }
  std::vector<cplx> c(coeffs_.begin() + 1, coeffs_.end());
  if (c.size() < 2) c.resize(2);
  return Series(std::move(c));
}

double Series::max_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = a[k] + b[k];
  return checked(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = a[k] - b[k];
  return checked(std::move(c));
}

Series operator*(cplx s, const Series& a) {
  std::vector<cplx> c(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) c[k] = s * a[k];
  return checked(std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  std::vector<cplx> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return checked(std::move(c));
}

Series div(const Series& a, const Series& b) {
  if (std::abs(b[0]) < kDivisorTolerance) {
    throw Error(ErrorCode::LeadingZeroDivisor, "divisor has vanishing constant term");
  }
  const std::size_t n = common_order(a, b);
  std::vector<cplx> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return checked(std::move(q));
}

// The derivative of an order-2 series keeps order 2 with a zero linear term,
// since the order invariant forbids going lower.
Series differentiate(const Series& a) {
  const std::size_t n = a.order() - 1;
  std::vector<cplx> c(std::max<std::size_t>(n, 2));
  for (std::size_t k = 0; k < n; ++k) c[k] = static_cast<double>(k + 1) * a[k + 1];
  return checked(std::move(c));
}

Series antidifferentiate(const Series& a) {
  std::vector<cplx> c(a.order() + 1);
  for (std::size_t k = 0; k < a.order(); ++k) c[k + 1] = a[k] / static_cast<double>(k + 1);
  return checked(std::move(c));
}

// L' = a'/a with L(0) = 0, written as the coefficient recurrence
// k L_k = k a_k - sum_{j=1}^{k-1} j L_j a_{k-j}.
Series log1(const Series& a) {
  if (std::abs(a[0] - 1.0) > kConstantTolerance) {
    throw Error(ErrorCode::NotUnitConstant, "log1 needs constant term 1");
  }
  const std::size_t n = a.order();
  std::vector<cplx> l(n);
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = static_cast<double>(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a[k - j];
    l[k] = acc / static_cast<double>(k);
  }
  return checked(std::move(l));
}

// E' = a' E with E(0) = 1: k E_k = sum_{j=1}^{k} j a_j E_{k-j}.
Series exp0(const Series& a) {
  if (std::abs(a[0]) > kConstantTolerance) {
    throw Error(ErrorCode::NotZeroConstant, "exp0 needs constant term 0");
  }
  const std::size_t n = a.order();
  std::vector<cplx> e(n);
  e[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
    if (std::abs(e[k]) > Series::kOverflowLimit || !std::isfinite(std::abs(e[k]))) {
      throw Error(ErrorCode::Overflow, "exp0 coefficient " + std::to_string(k) + " exceeds 1e150");
    }
  }
  return checked(std::move(e));
}

Series pow_real(const Series& a, double t) {
  return exp0(cplx(t) * log1(a));
}

Evaluation evaluate(const Series& a, cplx z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw Error(ErrorCode::OutsideDisk, "evaluation point needs |z| < 1");
  cplx acc{};
  for (std::size_t k = a.order(); k-- > 0;) acc = acc * z + a[k];
  const std::size_t last = a.order() - 1;
  const double tail = std::abs(a[last]) * std::pow(r, static_cast<double>(last)) / (1.0 - r);
  return {acc, tail};
}

std::optional<std::size_t> required_order(double r) {
  if (!(r > 0.0) || !(r < 1.0)) return std::nullopt;
  const double n = std::ceil(std::log(1e-12) / std::log(r));
  if (n > static_cast<double>(Series::kMaxOrder)) return std::nullopt;
  return std::max<std::size_t>(static_cast<std::size_t>(n), 2);
}

double max_coeff_error(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace hornich
