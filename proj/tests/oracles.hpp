#pragma once

// Reference values computed independently of the library: explicit series
// formulas, closed forms and naive loops.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Coefficients of 1/(1 - q z).
inline std::vector<cplx> geometric(std::size_t n, double q) {
  std::vector<cplx> c(n);
  double p = 1.0;
  for (std::size_t k = 0; k < n; ++k, p *= q) c[k] = p;
  return c;
}

// log(1 + z) = z - z^2/2 + z^3/3 - ...
inline std::vector<cplx> mercator(std::size_t n) {
  std::vector<cplx> c(n);
  for (std::size_t k = 1; k < n; ++k) c[k] = (k % 2 ? 1.0 : -1.0) / static_cast<double>(k);
  return c;
}

// exp(z) = sum z^k / k!
inline std::vector<cplx> exponential(std::size_t n) {
  std::vector<cplx> c(n);
  double f = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) f /= static_cast<double>(k);
    c[k] = f;
  }
  return c;
}

// Generalized binomial coefficients of (1 + s z)^q.
inline std::vector<cplx> binomial(std::size_t n, double s, double q) {
  std::vector<cplx> c(n);
  double b = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = b;
    b *= (q - static_cast<double>(k)) / static_cast<double>(k + 1) * s;
  }
  return c;
}

struct Jet {
  cplx f, df, d2f;
};

inline Jet cayley(cplx z) {
  const cplx u = 1.0 + z;
  return {z / u, 1.0 / (u * u), -2.0 / (u * u * u)};
}

inline Jet halfplane(cplx z) {
  const cplx u = 1.0 - z;
  return {z / u, 1.0 / (u * u), 2.0 / (u * u * u)};
}

inline Jet koebe(cplx z) {
  const cplx u = 1.0 - z;
  return {z / (u * u), (1.0 + z) / (u * u * u), (4.0 + 2.0 * z) / (u * u * u * u)};
}

// z - z^2/2 and its derivatives.
inline Jet ozaki_plus(cplx z) { return {z - z * z / 2.0, 1.0 - z, -1.0}; }
// z + z^2/2.
inline Jet ozaki_minus(cplx z) { return {z + z * z / 2.0, 1.0 + z, 1.0}; }

// 1 + z C''/C' for C = C_{alpha,beta}[ozaki_plus, cayley].
inline cplx gk_witness(double alpha, double beta, cplx z) {
  return (2.0 - (1.0 + alpha) * z) / (2.0 - z) - 2.0 * beta * z / (1.0 + z);
}

// Value of gk_witness at z = 2/(alpha+beta+1).
inline double gk_witness_at_critical(double alpha, double beta) {
  const double s = alpha + beta;
  return -3.0 * beta * (s - 1.0) / (s * (s + 3.0));
}

// Exact minimum arc integral of Re(1 + z F''/F') on |z| = r for F' = (1+z)^alpha,
// alpha < -2. The integrand is 1 + alpha Re(z/(1+z)) with antiderivative
// theta + alpha arg(1 + r e^{i theta}); it is negative exactly on
// |theta| < theta0, so that arc is the minimizer.
inline double kaplan_binomial_exact(double alpha, double r) {
  const double c = -(1.0 + r * r * (1.0 + alpha)) / (r * (2.0 + alpha));
  if (c >= 1.0) return 0.0;
  const double t0 = std::acos(std::max(-1.0, c));
  return 2.0 * t0 + 2.0 * alpha * std::arg(1.0 + std::polar(r, t0));
}

// Minimum over arcs of 1..max_len steps of the trapezoid integral, summing
// each arc directly.
inline double naive_min_arc(const std::vector<double>& v, std::size_t max_len) {
  const std::size_t m = v.size();
  const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
  double best = INFINITY;
  for (std::size_t s = 0; s < m; ++s) {
    double acc = 0.0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      acc += 0.5 * h * (v[(s + len - 1) % m] + v[(s + len) % m]);
      best = std::min(best, acc);
    }
  }
  return best;
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline cplx in_disk(std::mt19937_64& g, double rmax) {
  const double r = rmax * std::sqrt(uniform(g, 0.0, 1.0));
  return std::polar(r, uniform(g, 0.0, 2.0 * std::numbers::pi));
}

inline double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace oracle
