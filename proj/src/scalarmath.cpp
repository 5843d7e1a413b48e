#include "cvxasym/scalarmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cvxasym {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kLnSqrt2Pi = 0.91893853320467274178;

// Godfrey's 15-term Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  double a = kLanczos[0];
  for (int i = 1; i < 15; ++i) a += kLanczos[i] / (x - 1.0 + i);
  const double t = x - 0.5 + kLanczosG;
  return (x - 0.5) * std::log(t) - t + kLnSqrt2Pi + std::log(a);
}

double erf_taylor(double x) {
  // alternating series, |x| <= 2; worst-case term magnitude ~3.2, no harmful
  // cancellation at this range
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 120; ++k) {
    term *= -x2 / k;
    const double contrib = term / (2 * k + 1);
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 / kSqrtPi * sum;
}

double erfc_continued_fraction(double x) {
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  // evaluated by the modified Lentz method; x > 2 here so it converges fast.
  const double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k <= 300; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / (kSqrtPi * f);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: argument must be positive and finite");
  if (x >= 0.5) return lanczos_log_gamma(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), 0 < x < 0.5
  return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
}

double erf(double x) {
  if (std::isnan(x)) throw std::domain_error("erf: argument must be finite");
  const double ax = std::abs(x);
  double v;
  if (ax <= 2.0)
    v = erf_taylor(ax);
  else if (ax < 27.0)
    v = 1.0 - erfc_continued_fraction(ax);
  else
    v = 1.0;
  return x < 0.0 ? -v : v;
}

double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) throw std::domain_error("log_sum_exp: empty sequence");
  double m = -std::numeric_limits<double>::infinity();
  for (double t : terms) m = std::max(m, t);
  if (std::isinf(m) && m < 0.0) return m;  // all terms are log(0)
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

LogReal unit_ball_volume(int n, PNorm p) {
  if (n < 0) throw std::domain_error("unit_ball_volume: dimension must be >= 0");
  if (n == 0) return LogReal::from_log(0.0);
  const double nd = n;
  switch (p) {
    case PNorm::One:
      return LogReal::from_log(nd * std::log(2.0) - log_gamma(nd + 1.0));
    case PNorm::Two:
      return LogReal::from_log(0.5 * nd * std::log(kPi) - log_gamma(0.5 * nd + 1.0));
    case PNorm::Inf:
      return LogReal::from_log(nd * std::log(2.0));
  }
  throw std::domain_error("unit_ball_volume: unsupported norm");
}

double series_f(double x, int term_count) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("series_f: x must be >= 0");
  if (term_count < 1) throw std::domain_error("series_f: need at least one term");
  if (x == 0.0) return 1.0;  // only the k=0 term survives
  const double lx = std::log(x / 2.0);
  std::vector<double> logs(static_cast<size_t>(term_count));
  for (int k = 0; k < term_count; ++k)
    logs[static_cast<size_t>(k)] = k * lx - log_gamma(0.5 * k + 1.0);
  return std::exp(log_sum_exp(logs));
}

double closed_f(double x) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("closed_f: x must be >= 0");
  return (erf(0.5 * x) + 1.0) * std::exp(0.25 * x * x);
}

}  // namespace cvxasym
