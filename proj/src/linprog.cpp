#include "cvxasym/linprog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cvxasym {

namespace {

constexpr double kEps = 1e-11;

// Standard-form tableau simplex: minimize c'z subject to M z = r, z >= 0,
// starting from the given basis (one basic column per row).  Bland's rule.
// Returns false if unbounded.
bool simplex_core(Mat& T, std::vector<int>& basis, long cols) {
  const long m = T.rows() - 1;  // last row is the objective
  for (long iter = 0; iter < 200000; ++iter) {
    long pivot_col = -1;
    for (long j = 0; j < cols; ++j) {
      if (T(m, j) < -kEps) {
        pivot_col = j;
        break;  // Bland: first improving column
      }
    }
    if (pivot_col < 0) return true;  // optimal
    long pivot_row = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (long i = 0; i < m; ++i) {
      if (T(i, pivot_col) > kEps) {
        const double ratio = T(i, cols) / T(i, pivot_col);
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps &&
             (pivot_row < 0 || basis[static_cast<size_t>(i)] <
                                   basis[static_cast<size_t>(pivot_row)]))) {
          best_ratio = ratio;
          pivot_row = i;
        }
      }
    }
    if (pivot_row < 0) return false;  // unbounded
    const double piv = T(pivot_row, pivot_col);
    T.row(pivot_row) /= piv;
    for (long i = 0; i <= m; ++i) {
      if (i == pivot_row) continue;
      const double f = T(i, pivot_col);
      if (f != 0.0) T.row(i) -= f * T.row(pivot_row);
    }
    basis[static_cast<size_t>(pivot_row)] = static_cast<int>(pivot_col);
  }
  throw std::runtime_error("simplex: iteration cap reached");
}

}  // namespace

LpResult lp_maximize(const Mat& A, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(A.rows());
  const int d = static_cast<int>(A.cols());
  // variables: x = xp - xn (2d columns), slack s (m), artificial a (<= m)
  // rows with b_i < 0 are negated so the rhs is nonnegative.
  std::vector<int> art_rows;
  Mat M(m, 2 * d + m);
  Vec r(m);
  for (int i = 0; i < m; ++i) {
    const double sgn = b(i) < 0.0 ? -1.0 : 1.0;
    M.row(i).head(d) = sgn * A.row(i);
    M.row(i).segment(d, d) = -sgn * A.row(i);
    M.row(i).tail(m).setZero();
    M(i, 2 * d + i) = sgn;  // slack
    r(i) = sgn * b(i);
    if (sgn < 0.0) art_rows.push_back(i);
  }
  const int n_art = static_cast<int>(art_rows.size());
  const int total = 2 * d + m + n_art;
  Mat T = Mat::Zero(m + 1, total + 1);
  T.block(0, 0, m, 2 * d + m) = M;
  T.block(0, total, m, 1) = r;
  std::vector<int> basis(static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = 2 * d + i;
  for (int k = 0; k < n_art; ++k) {
    const int i = art_rows[static_cast<size_t>(k)];
    T(i, 2 * d + i) = 0.0;   // negated slack leaves the basis
    T(i, 2 * d + m + k) = 1.0;
    basis[static_cast<size_t>(i)] = 2 * d + m + k;
  }

  LpResult res;
  if (n_art > 0) {
    // phase 1: minimize sum of artificials
    for (int k = 0; k < n_art; ++k) T(m, 2 * d + m + k) = 1.0;
    for (int k = 0; k < n_art; ++k)
      T.row(m) -= T.row(art_rows[static_cast<size_t>(k)]);
    simplex_core(T, basis, total);
    if (T(m, total) < -kEps * 10) return res;  // infeasible (residual > 0)
    T.row(m).setZero();
  }
  // phase 2: minimize -c'x
  for (int j = 0; j < d; ++j) {
    T(m, j) = -c(j);
    T(m, d + j) = c(j);
  }
  for (int i = 0; i < m; ++i) {
    const int bj = basis[static_cast<size_t>(i)];
    if (T(m, bj) != 0.0) T.row(m) -= T(m, bj) * T.row(i);
  }
  // artificials must not re-enter
  const int cols = 2 * d + m;
  res.feasible = true;
  res.bounded = simplex_core(T, basis, cols);
  if (!res.bounded) return res;
  Vec z = Vec::Zero(total);
  for (int i = 0; i < m; ++i) z(basis[static_cast<size_t>(i)]) = T(i, total);
  res.x = z.head(d) - z.segment(d, d);
  res.objective = c.dot(res.x);
  return res;
}

double convex_combination_residual(const Mat& points, const Vec& x) {
  const int mpts = static_cast<int>(points.rows());
  const int d = static_cast<int>(points.cols());
  if (d != x.size())
    throw std::domain_error("convex_combination_residual: dimension mismatch");
  const int m = d + 1;  // equality rows
  // minimize sum of artificials for [P' ; 1'] lambda = [x ; 1], lambda >= 0
  Mat M(m, mpts);
  Vec r(m);
  M.topRows(d) = points.transpose();
  M.bottomRows(1).setOnes();
  r.head(d) = x;
  r(d) = 1.0;
  // scale so the residual is meaningful relative to coordinates near 1
  for (int i = 0; i < m; ++i) {
    if (r(i) < 0.0) {
      M.row(i) *= -1.0;
      r(i) *= -1.0;
    }
  }
  const int total = mpts + m;
  Mat T = Mat::Zero(m + 1, total + 1);
  T.block(0, 0, m, mpts) = M;
  T.block(0, mpts, m, m) = Mat::Identity(m, m);
  T.block(0, total, m, 1) = r;
  std::vector<int> basis(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = mpts + i;
  for (int j = mpts; j < total; ++j) T(m, j) = 1.0;
  for (int i = 0; i < m; ++i) T.row(m) -= T.row(i);
  simplex_core(T, basis, total);
  return -T(m, total);  // phase-1 objective value (>= 0)
}

}  // namespace cvxasym
