#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hornich {

using cplx = std::complex<double>;

// Truncated Taylor expansion c_0 + c_1 z + ... + c_{N-1} z^{N-1} at the origin.
//
// Every Series holds at least two coefficients and only finite values; the
// constructors enforce both. Binary operations between Series of different
// order truncate to the smaller one first. Any operation whose result has a
// coefficient beyond 1e150 in magnitude throws ErrorCode::Overflow.
class Series {
 public:
  static constexpr std::size_t kDefaultOrder = 256;
  static constexpr std::size_t kMaxOrder = 8192;
  static constexpr double kOverflowLimit = 1e150;

  explicit Series(std::vector<cplx> coeffs);

  static Series zero(std::size_t order);
  static Series constant(cplx value, std::size_t order);
  // c_0 + c_1 z, padded with zeros.
  static Series linear(cplx c0, cplx c1, std::size_t order);
  // z -> z^k.
  static Series monomial(std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  Series truncated(std::size_t order) const;
  // f(z)/z for a series with c_0 = 0; order drops by one.
  Series shifted_down() const;

  double max_abs() const;

 private:
  std::vector<cplx> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(cplx s, const Series& a);

Series mul(const Series& a, const Series& b);
Series div(const Series& a, const Series& b);
Series differentiate(const Series& a);
Series antidifferentiate(const Series& a);
Series log1(const Series& a);
Series exp0(const Series& a);
Series pow_real(const Series& a, double t);

struct Evaluation {
  cplx value;
  // |c_{N-1}| |z|^{N-1} / (1 - |z|): heuristic size of the neglected tail.
  double tail_bound;
};

Evaluation evaluate(const Series& a, cplx z);

// Smallest order N with r^N < 1e-12, or nullopt when that exceeds kMaxOrder.
std::optional<std::size_t> required_order(double r);

double max_coeff_error(const Series& a, const Series& b);

}  // namespace hornich
