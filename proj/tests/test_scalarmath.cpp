#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cvxasym/logreal.hpp"
#include "cvxasym/scalarmath.hpp"

using namespace cvxasym;

namespace {

constexpr double kPi = 3.14159265358979323846;

// independent oracle: adaptive Simpson quadrature of (2/sqrt(pi)) exp(-t^2)
double simpson(double (*f)(double), double a, double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

double adaptive_simpson(double (*f)(double), double a, double b, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, right, 0.5 * tol, depth - 1);
}

double erf_integrand(double t) { return 2.0 / std::sqrt(kPi) * std::exp(-t * t); }

double erf_quadrature(double x) {
  if (x == 0.0) return 0.0;
  return adaptive_simpson(erf_integrand, 0.0, x, simpson(erf_integrand, 0.0, x), 1e-13,
                          40);
}

}  // namespace

TEST_CASE("log_gamma matches exact factorials") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  // 10! by integer multiplication
  long long fact = 1;
  for (int i = 2; i <= 10; ++i) fact *= i;
  CHECK(fact == 3628800);
  CHECK(log_gamma(11.0) ==
        doctest::Approx(std::log(static_cast<double>(fact))).epsilon(1e-14));
}

TEST_CASE("log_gamma agrees with the C library across the contract range") {
  for (double x : {0.5, 0.7, 1.0, 1.5, 2.0, 3.7, 10.0, 55.5, 171.0, 1e3, 1e4, 1e5, 1e6}) {
    const double ref = std::lgamma(x);
    const double mine = log_gamma(x);
    const double scale = std::max(1.0, std::abs(ref));
    CHECK(std::abs(mine - ref) <= 1e-13 * scale);
  }
}

TEST_CASE("log_gamma recurrence") {
  // |lg(x+1) - lg(x) - ln x| <= 1e-12 relative to the value's magnitude;
  // the absolute version is below double ulp once lgamma exceeds ~1e4.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double t = static_cast<double>(i) / 999.0;
    const double x = 0.5 * std::pow(2e5, t);  // log-spaced on [0.5, 1e5]
    const double lhs = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
    const double scale = std::max(1.0, std::abs(log_gamma(x + 1.0)));
    CHECK(std::abs(lhs) <= 1e-12 * scale);
  }
}

TEST_CASE("log_gamma rejects bad arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("erf against quadrature oracle and the C library") {
  CHECK(cvxasym::erf(0.0) == 0.0);
  // the value the series/closed-form identity pivots on
  const double x0 = std::sqrt(kPi) / 2.0;
  CHECK(cvxasym::erf(x0) == doctest::Approx(erf_quadrature(x0)).epsilon(1e-12));
  CHECK(cvxasym::erf(x0) == doctest::Approx(0.78986).epsilon(1e-4));
  for (double x : {0.1, 0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 4.5, 6.0, 8.0}) {
    CHECK(std::abs(cvxasym::erf(x) - std::erf(x)) <= 1e-14);
    CHECK(std::abs(cvxasym::erf(x) - erf_quadrature(x)) <= 5e-12);
  }
  CHECK(std::abs(cvxasym::erf(6.0) - 1.0) <= 1e-14);
}

TEST_CASE("erf oddness and monotonicity") {
  double prev = -1.1;
  for (int i = -60; i <= 60; ++i) {
    const double x = 0.1 * i;
    const double v = cvxasym::erf(x);
    CHECK(cvxasym::erf(-x) == -v);  // exact by construction
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("log_sum_exp basics") {
  const std::vector<double> two_zeros{0.0, 0.0};
  CHECK(log_sum_exp(two_zeros) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  const std::vector<double> big{1000.0, 1000.0};
  CHECK(log_sum_exp(big) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
  const std::vector<double> l123{std::log(1.0), std::log(2.0), std::log(3.0)};
  CHECK(log_sum_exp(l123) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_sum_exp(std::vector<double>{}), std::domain_error);
}

TEST_CASE("log_sum_exp shift invariance") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-50.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> t(1 + rng() % 20);
    for (double& v : t) v = U(rng);
    const double s = U(rng);
    std::vector<double> shifted = t;
    for (double& v : shifted) v += s;
    CHECK(std::abs(log_sum_exp(shifted) - (log_sum_exp(t) + s)) <= 1e-12);
  }
}

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(2, PNorm::Two).value() == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(unit_ball_volume(3, PNorm::One).value() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(unit_ball_volume(4, PNorm::Inf).value() == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(unit_ball_volume(0, PNorm::Two).value() == 1.0);
  CHECK_THROWS_AS(unit_ball_volume(-1, PNorm::Two), std::domain_error);
}

TEST_CASE("series_f and closed form agree") {
  CHECK(series_f(0.0, 1) == 1.0);
  const double sp = std::sqrt(kPi);
  CHECK(closed_f(sp) == doctest::Approx(3.9256).epsilon(1e-4));
  CHECK(std::abs(series_f(sp, 200) - closed_f(sp)) <= 1e-12);
  for (double x : {0.5, 1.0, sp, 2.5})
    CHECK(std::abs(series_f(x, 300) - closed_f(x)) < 1e-10);
  CHECK_THROWS_AS(series_f(-0.5, 10), std::domain_error);
  CHECK_THROWS_AS(series_f(1.0, 0), std::domain_error);
}

TEST_CASE("LogReal arithmetic and round trip") {
  const LogReal a = LogReal::from_value(3.0);
  const LogReal b = LogReal::from_value(4.0);
  CHECK((a * b).log() == a.log() + b.log());  // multiplication adds logs exactly
  CHECK((a / b).value() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(a.pow(2.0).value() == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(LogReal().is_zero());
  CHECK(LogReal().value() == 0.0);
  CHECK_THROWS_AS(LogReal::from_value(-1.0), std::domain_error);

  // Round trip: the log domain carries |ln v| * 2^-53 relative precision, so
  // the round-trip error is bounded by (|ln v| + 2) ulp-equivalents.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const double mant = 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const int k = static_cast<int>(rng() % 1993) - 996;
    const double v = std::ldexp(mant, k);
    if (!(v >= 1e-300) || !(v <= 1e300)) continue;
    const double rt = LogReal::from_value(v).value();
    const double rel = std::abs(rt - v) / v;
    CHECK(rel <= (std::abs(std::log(v)) + 2.0) * 0x1.0p-53);
  }
  // and values of order one round-trip to the last bit
  for (double v : {1.0, 2.0, 0.5, 3.0})
    CHECK(LogReal::from_value(v).value() == doctest::Approx(v).epsilon(5e-16));
}
