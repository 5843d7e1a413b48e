#ifndef CVXASYM_SCALARMATH_HPP
#define CVXASYM_SCALARMATH_HPP

#include <span>

#include "cvxasym/logreal.hpp"

namespace cvxasym {

enum class PNorm { One, Two, Inf };

/// ln Gamma(x) for x > 0.  Lanczos evaluation with reflection below 0.5;
/// relative error stays under 1e-13 on [0.5, 1e6].
double log_gamma(double x);

/// Error function (2/sqrt(pi)) * integral_0^x exp(-t^2) dt.
/// Taylor series for |x| <= 2, complementary continued fraction beyond.
/// Odd symmetry holds exactly.
double erf(double x);

/// ln sum_i exp(t_i) without overflow (max-shifted).  -inf terms are allowed
/// and contribute zero.  Empty input is a domain error.
double log_sum_exp(std::span<const double> terms);

/// Volume of the unit p-ball in dimension n: 2^n/Gamma(1+n) for p=1,
/// pi^(n/2)/Gamma(1+n/2) for p=2, 2^n for p=inf.  vol_0 = 1 by convention.
LogReal unit_ball_volume(int n, PNorm p);

/// Partial sum  sum_{k=0}^{N-1} (x/2)^k / Gamma(k/2+1), x >= 0, N >= 1,
/// accumulated in the log domain.
double series_f(double x, int term_count);

/// (erf(x/2)+1) * exp(x^2/4) -- the closed form the series converges to.
double closed_f(double x);

}  // namespace cvxasym

#endif
