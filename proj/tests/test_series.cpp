#include <doctest.h>

#include <cmath>
#include <limits>

#include "hornich/error.hpp"
#include "hornich/series.hpp"
#include "oracles.hpp"

using namespace hornich;

namespace {

Series from(std::vector<cplx> c) { return Series(std::move(c)); }

std::vector<cplx> as_vector(const Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hornich::Error");
  return ErrorCode::BadParam;
}

// Unit-constant series with coefficient moduli at most `scale`.
Series random_unit(std::mt19937_64& g, std::size_t n, double scale) {
  std::vector<cplx> c(n);
  c[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    c[k] = std::polar(oracle::uniform(g, 0.0, scale), oracle::uniform(g, -M_PI, M_PI));
  }
  return from(c);
}

}  // namespace

TEST_CASE("construction enforces order and finiteness") {
  CHECK(code_of([] { Series(std::vector<cplx>{1.0}); }) == ErrorCode::BadParam);
  CHECK(code_of([] { Series(std::vector<cplx>{1.0, NAN}); }) == ErrorCode::Overflow);
  CHECK(Series::monomial(3, 5)[3] == cplx(1.0));
  CHECK(Series::linear(1.0, 2.0, 4).order() == 4);
}

TEST_CASE("mul") {
  const std::size_t n = 16;
  const Series p = mul(Series::linear(1, 1, n), Series::linear(1, -1, n));
  CHECK(p[0] == cplx(1.0));
  CHECK(p[2] == cplx(-1.0));
  for (std::size_t k : {1u, 3u, 4u, 15u}) CHECK(p[k] == cplx(0.0));

  auto g = oracle::rng();
  const Series s = random_unit(g, n, 1.0);
  CHECK(max_coeff_error(mul(s, Series::constant(1.0, n)), s) == 0.0);

  const Series inv = div(Series::constant(1.0, n), Series::linear(1, 1, n));
  CHECK(max_coeff_error(mul(inv, Series::linear(1, 1, n)), Series::constant(1.0, n)) < 1e-14);
}

TEST_CASE("mixed orders truncate to the smaller order") {
  const Series a = Series::constant(1.0, 10);
  const Series b = Series::linear(1, 1, 4);
  CHECK(mul(a, b).order() == 4);
  CHECK((a + b).order() == 4);
  CHECK(div(a, b).order() == 4);
}

TEST_CASE("div") {
  const std::size_t n = 64;
  const Series one = Series::constant(1.0, n);
  CHECK(oracle::max_diff(as_vector(div(one, Series::linear(1, 1, n))), oracle::geometric(n, -1)) < 1e-15);
  CHECK(oracle::max_diff(as_vector(div(one, Series::linear(1, -1, n))), oracle::geometric(n, 1)) < 1e-15);
  auto g = oracle::rng(7);
  const Series a = random_unit(g, n, 1.0);
  CHECK(max_coeff_error(div(a, one), a) == 0.0);
  CHECK(code_of([&] { div(one, Series::monomial(1, n)); }) == ErrorCode::LeadingZeroDivisor);
  CHECK(code_of([&] { div(one, Series::linear(1e-15, 1, n)); }) == ErrorCode::LeadingZeroDivisor);
}

TEST_CASE("differentiate and antidifferentiate") {
  const Series d = differentiate(Series::monomial(2, 8));
  CHECK(d.order() == 7);
  CHECK(d[1] == cplx(2.0));
  CHECK(differentiate(Series::constant(1.0, 8)).max_abs() == 0.0);

  std::vector<cplx> koebe(32);
  for (std::size_t k = 0; k < koebe.size(); ++k) koebe[k] = static_cast<double>(k);
  const Series dk = differentiate(from(koebe));
  for (std::size_t k = 0; k < dk.order(); ++k) CHECK(dk[k] == cplx(static_cast<double>((k + 1) * (k + 1))));

  const Series a = antidifferentiate(Series::linear(1, 1, 8));
  CHECK(a.order() == 9);
  CHECK(a[0] == cplx(0.0));
  CHECK(a[1] == cplx(1.0));
  CHECK(a[2] == cplx(0.5));
  CHECK(antidifferentiate(Series::zero(8)).max_abs() == 0.0);

  // (1+t)^-2 integrates to z/(1+z) = z - z^2 + z^3 - ...
  const std::size_t n = 40;
  const Series sq = div(Series::constant(1.0, n), mul(Series::linear(1, 1, n), Series::linear(1, 1, n)));
  const Series cay = antidifferentiate(sq);
  for (std::size_t k = 1; k < cay.order(); ++k) CHECK(std::abs(cay[k] - (k % 2 ? 1.0 : -1.0)) < 1e-12);
}

// (x / n) * n is x up to one rounding, so "exact" means within an ulp.
TEST_CASE("differentiate undoes antidifferentiate") {
  auto g = oracle::rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Series s = random_unit(g, 64, 2.0);
    const Series back = differentiate(antidifferentiate(s));
    REQUIRE(back.order() == s.order());
    for (std::size_t k = 0; k < s.order(); ++k) {
      CHECK(std::abs(back[k].real() - s[k].real()) <= std::numeric_limits<double>::epsilon() * std::abs(s[k].real()));
      CHECK(std::abs(back[k].imag() - s[k].imag()) <= std::numeric_limits<double>::epsilon() * std::abs(s[k].imag()));
    }
  }
}

TEST_CASE("log1 and exp0") {
  const std::size_t n = 64;
  CHECK(log1(Series::constant(1.0, n)).max_abs() == 0.0);
  CHECK(oracle::max_diff(as_vector(log1(Series::linear(1, 1, n))), oracle::mercator(n)) < 1e-15);
  CHECK(oracle::max_diff(as_vector(exp0(Series::monomial(1, n))), oracle::exponential(n)) < 1e-15);
  CHECK(max_coeff_error(exp0(Series::zero(n)), Series::constant(1.0, n)) == 0.0);
  CHECK(max_coeff_error(log1(exp0(Series::monomial(1, n))), Series::monomial(1, n)) < 1e-14);
  CHECK(max_coeff_error(exp0(log1(Series::linear(1, 1, n))), Series::linear(1, 1, n)) < 1e-14);
  CHECK(code_of([&] { log1(Series::linear(2, 1, n)); }) == ErrorCode::NotUnitConstant);
  CHECK(code_of([&] { exp0(Series::linear(0.5, 1, n)); }) == ErrorCode::NotZeroConstant);
}

TEST_CASE("log1 and exp0 are inverse on random inputs") {
  auto g = oracle::rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    // log1 of a random unit series grows geometrically, so errors are
    // measured against the size of the intermediate.
    const Series a = random_unit(g, 64, 1.0);
    const Series la = log1(a);
    CHECK(max_coeff_error(exp0(la), a) <= 1e-13 * (1.0 + la.max_abs()));
    std::vector<cplx> c(as_vector(a));
    c[0] = 0.0;
    const Series l = from(c);
    const Series el = exp0(l);
    CHECK(max_coeff_error(log1(el), l) <= 1e-13 * (1.0 + el.max_abs()));
  }
}

TEST_CASE("pow_real") {
  const std::size_t n = 64;
  const Series u = Series::linear(1, 1, n);
  CHECK(max_coeff_error(pow_real(u, 2.0), mul(u, u)) < 1e-14);
  CHECK(max_coeff_error(pow_real(u, 0.0), Series::constant(1.0, n)) == 0.0);
  CHECK(oracle::max_diff(as_vector(pow_real(u, -1.0)), oracle::geometric(n, -1)) < 1e-13);
  CHECK(oracle::max_diff(as_vector(pow_real(u, -2.5)), oracle::binomial(n, 1, -2.5)) < 1e-9);
  CHECK(code_of([&] { pow_real(Series::linear(3, 1, n), 0.5); }) == ErrorCode::NotUnitConstant);

  auto g = oracle::rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_unit(g, 64, 0.5);
    const double s = oracle::uniform(g, -2, 2);
    const double t = oracle::uniform(g, -2, 2);
    const Series lhs = pow_real(a, s + t);
    const Series ps = pow_real(a, s);
    const Series pt = pow_real(a, t);
    CHECK(max_coeff_error(lhs, mul(ps, pt)) <= 1e-12 * (1.0 + ps.max_abs() * pt.max_abs() + lhs.max_abs()));
  }
}

TEST_CASE("ring laws and div round trip") {
  auto g = oracle::rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_unit(g, 64, 0.5);
    const Series b = random_unit(g, 64, 0.5);
    const Series c = random_unit(g, 64, 0.5);
    CHECK(max_coeff_error(mul(a, b), mul(b, a)) <= 1e-14 * (1.0 + mul(a, b).max_abs()));
    const Series abc = mul(mul(a, b), c);
    CHECK(max_coeff_error(abc, mul(a, mul(b, c))) <= 1e-10 * (1.0 + abc.max_abs()));
    // Relative to the size of the products that cancel in q * b.
    const Series q = div(a, b);
    CHECK(max_coeff_error(mul(q, b), a) <= 1e-10 * q.max_abs() * b.max_abs());
  }
}

TEST_CASE("evaluate") {
  const Series inv = div(Series::constant(1.0, 64), Series::linear(1, 1, 64));
  const Evaluation e = evaluate(inv, 0.5);
  CHECK(std::abs(e.value - 2.0 / 3.0) < 1e-12);
  CHECK(e.tail_bound < 1e-12);
  CHECK(std::abs(evaluate(from(oracle::geometric(64, 1)), 0.5).value - 2.0) < 1e-12);
  CHECK(evaluate(Series::monomial(1, 8), 0.0).value == cplx(0.0));
  CHECK(code_of([&] { evaluate(inv, 1.0); }) == ErrorCode::OutsideDisk);
  CHECK(code_of([&] { evaluate(inv, cplx(0.8, 0.7)); }) == ErrorCode::OutsideDisk);

  auto g = oracle::rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_unit(g, 32, 1.0);
    const Series b = random_unit(g, 32, 1.0);
    const cplx z = oracle::in_disk(g, 0.9);
    const cplx lhs = evaluate(a + b, z).value;
    const cplx rhs = evaluate(a, z).value + evaluate(b, z).value;
    CHECK(std::abs(lhs - rhs) < 1e-13 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("required_order") {
  CHECK(required_order(0.5).value() == 40);
  CHECK(std::pow(0.99, static_cast<double>(*required_order(0.99))) < 1e-12);
  CHECK(std::pow(0.99, static_cast<double>(*required_order(0.99) - 1)) >= 1e-12);
  CHECK_FALSE(required_order(0.999).has_value());  // would need 27618 > 8192
}

TEST_CASE("overflow is reported") {
  CHECK(code_of([] { exp0(1000.0 * Series::monomial(1, 400)); }) == ErrorCode::Overflow);
  CHECK(code_of([] { pow_real(Series::linear(1, 1e3, 64), 60.0); }) == ErrorCode::Overflow);
}
