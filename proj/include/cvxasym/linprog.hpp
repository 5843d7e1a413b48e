#ifndef CVXASYM_LINPROG_HPP
#define CVXASYM_LINPROG_HPP

#include "cvxasym/types.hpp"

namespace cvxasym {

struct LpResult {
  bool feasible = false;
  bool bounded = false;
  double objective = 0.0;
  Vec x;
};

/// Maximize c'x subject to A x <= b (free x).  Dense two-phase simplex with
/// Bland's rule; sized for the small polytopes this library produces.
LpResult lp_maximize(const Mat& A, const Vec& b, const Vec& c);

/// Feasibility of  P' lambda = x, sum lambda = 1, lambda >= 0  (columns of P'
/// are the rows of P = candidate points).  Returns the phase-1 residual, which
/// is ~0 exactly when x lies in the convex hull of the rows of P.
double convex_combination_residual(const Mat& points, const Vec& x);

}  // namespace cvxasym

#endif
