#include "cvxasym/ellipsoids.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "cvxasym/errors.hpp"
#include "cvxasym/scalarmath.hpp"

namespace cvxasym {

namespace {

constexpr double kGolden = 0.61803398874989484820;

double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double tol) {
  const double lo0 = lo, hi0 = hi;
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    }
  }
  // Parabolic polish: golden alone bottoms out near sqrt(eps) because the
  // comparisons turn into round-off noise; a central three-point vertex with
  // noise-robust spacing recovers the remaining digits.
  double xm = 0.5 * (lo + hi);
  for (double h : {3e-6, 3e-7}) {
    const double xp = xm + h, xq = xm - h;
    if (xp > hi0 || xq < lo0) continue;
    const double fp = f(xp), f0 = f(xm), fq = f(xq);
    if (!std::isfinite(fp) || !std::isfinite(f0) || !std::isfinite(fq)) continue;
    const double denom = fp - 2.0 * f0 + fq;
    if (denom <= 0.0) continue;
    double cand = xm - 0.5 * h * (fp - fq) / denom;
    cand = std::min(std::max(cand, lo0), hi0);
    if (std::isfinite(f(cand))) xm = cand;
  }
  return xm;
}

// negative log-volume^2 profile of the Loewner candidate at center c
double loewner_log_profile(double A, double B, int n, double c) {
  const double N = A * (1.0 - c) * (1.0 - c) - B * c * c;
  const double b2 = N / (A - B);
  const double a2 = N / (1.0 - 2.0 * c);
  if (!(b2 > 0.0) || !(a2 > 0.0)) return std::numeric_limits<double>::infinity();
  return std::log(b2) + n * std::log(a2);
}

// negative of the log-volume^2 profile of the b = c John candidate
double john_log_profile(double r0, double r1, int n, double c) {
  const double a2 = r0 * r0 - 2.0 * r0 * (r0 - r1) * c;
  if (!(a2 > 0.0) || !(c > 0.0)) return std::numeric_limits<double>::infinity();
  return -(2.0 * std::log(c) + n * std::log(a2));
}

}  // namespace

double Ellipsoid::mahalanobis2(const Vec& x) const {
  const Vec r = x - center;
  return r.dot(shape * r);
}

double Ellipsoid::log_volume() const {
  Eigen::LDLT<Mat> ldlt(shape);
  const double logdet = ldlt.vectorD().array().log().sum();
  return unit_ball_volume(static_cast<int>(center.size()), PNorm::Two).log() -
         0.5 * logdet;
}

double Ellipsoid::centered_support(const Vec& theta) const {
  Eigen::LDLT<Mat> ldlt(shape);
  return std::sqrt(theta.dot(ldlt.solve(theta)));
}

Ellipsoid mvee(const Mat& points, double epsilon, MveeStats* stats) {
  const int m = static_cast<int>(points.rows());
  const int d = static_cast<int>(points.cols());
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::domain_error("mvee: epsilon must lie in (0,1)");
  if (m < d + 1) throw degeneracy_error("mvee: too few points to span");

  Mat Q(m, d + 1);
  Q.leftCols(d) = points;
  Q.col(d).setOnes();
  Vec u = Vec::Constant(m, 1.0 / m);
  const int dd = d + 1;

  Mat X = Q.transpose() * u.asDiagonal() * Q;
  Eigen::FullPivLU<Mat> lu(X);
  if (!lu.isInvertible())
    throw degeneracy_error("mvee: points do not affinely span the space");
  Mat Xinv = lu.inverse();

  const long kMaxIter = 1000000;
  long refresh = 0;
  bool converged = false;
  for (long iter = 0; iter < kMaxIter; ++iter) {
    // g_i = q_i' Xinv q_i
    Vec g = ((Q * Xinv).cwiseProduct(Q)).rowwise().sum();
    int jmax = 0, jmin = -1;
    double kp = -1.0, km = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (g(i) > kp) {
        kp = g(i);
        jmax = i;
      }
      if (u(i) > 1e-300 && g(i) < km) {
        km = g(i);
        jmin = i;
      }
    }
    if (kp <= (1.0 + epsilon) * dd) {
      converged = true;
      if (stats) {
        stats->dual_gap = kp / dd - 1.0;
        stats->iterations = iter;
      }
      break;
    }
    double alpha, beta;  // X <- alpha X + beta q q'
    int j;
    if (kp - dd >= dd - km || jmin < 0) {
      const double step = (kp - dd) / (dd * (kp - 1.0));
      j = jmax;
      u *= (1.0 - step);
      u(j) += step;
      alpha = 1.0 - step;
      beta = step;
    } else {
      double step = (km > 1.0 + 1e-12)
                        ? (dd - km) / (dd * (km - 1.0))
                        : std::numeric_limits<double>::infinity();
      const double cap = u(jmin) / (1.0 - u(jmin));
      step = std::min(step, cap);
      j = jmin;
      u *= (1.0 + step);
      u(j) -= step;
      if (u(j) < 0.0) u(j) = 0.0;
      alpha = 1.0 + step;
      beta = -step;
    }
    if (++refresh % 512 == 0) {
      X = Q.transpose() * u.asDiagonal() * Q;
      Xinv = X.fullPivLu().inverse();
      continue;
    }
    const Vec q = Q.row(j).transpose();
    const Vec Xq = Xinv * q;
    const double gq = q.dot(Xq);
    const double denom = 1.0 + (beta / alpha) * gq;
    if (!(std::abs(denom) > 1e-12)) {  // drop step hit a support boundary
      X = Q.transpose() * u.asDiagonal() * Q;
      Xinv = X.fullPivLu().inverse();
      continue;
    }
    Xinv = Xinv / alpha - (beta / (alpha * alpha * denom)) * (Xq * Xq.transpose());
  }
  if (!converged) throw convergence_error("mvee: iteration cap exceeded");

  const Vec c = points.transpose() * u;
  Mat M = points.transpose() * u.asDiagonal() * points - c * c.transpose();
  M = 0.5 * (M + M.transpose());
  Eigen::LDLT<Mat> ldlt(M);
  if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() <= 0.0).any())
    throw degeneracy_error("mvee: covariance not positive definite");
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vec r = (points.row(i).transpose() - c).eval();
    s = std::max(s, r.dot(ldlt.solve(r)));
  }
  Ellipsoid e;
  e.center = c;
  e.shape = ldlt.solve(Mat::Identity(d, d)) / s;
  e.shape = 0.5 * (e.shape + e.shape.transpose());
  return e;
}

RevolutionSolution revolution_loewner_solve(double R0, double R1, int n) {
  if (!(R1 > 0.0) || R0 < R1)
    throw std::domain_error("revolution_loewner_solve: need R0 >= R1 > 0");
  if (n < 2) throw std::domain_error("revolution_loewner_solve: n must be >= 2");
  RevolutionSolution sol;
  sol.which = RevolutionKind::Loewner;
  if (R0 == R1) {
    sol.c = 0.5;
    sol.b = 0.5 * std::sqrt(n + 1.0);
    sol.a = R0 * std::sqrt((n + 1.0) / n);
    return sol;
  }
  const double A = R0 * R0, B = R1 * R1;
  const double P = (n + 3.0) * A - (n + 1.0) * B;
  const double disc = P * P - 4.0 * (n + 2.0) * (A - B) * A;
  if (disc < 0.0)
    throw infeasibility_error("revolution_loewner_solve: negative discriminant");
  const double c = (P - std::sqrt(disc)) / (2.0 * (n + 2.0) * (A - B));
  if (!(c > 0.0 && c < 0.5))
    throw validity_error("revolution_loewner_solve: root outside (0, 1/2)");
  const double N = A * (1.0 - c) * (1.0 - c) - B * c * c;
  sol.c = c;
  sol.b = std::sqrt(N / (A - B));
  sol.a = std::sqrt(N / (1.0 - 2.0 * c));
  return sol;
}

double revolution_loewner_center(double R0, double R1, int n) {
  return revolution_loewner_solve(R0, R1, n).c;
}

RevolutionSolution revolution_john_solve(double r0, double r1, int n) {
  if (!(r0 > 0.0) || !(r1 > 0.0))
    throw std::domain_error("revolution_john_solve: radii must be positive");
  if (n < 2) throw std::domain_error("revolution_john_solve: n must be >= 2");
  RevolutionSolution sol;
  sol.which = RevolutionKind::John;
  if (r0 == r1) {
    sol.c = 0.5;
    sol.b = 0.5;
    sol.a = r0;
    return sol;
  }
  if (r0 < r1) {
    RevolutionSolution r = revolution_john_solve(r1, r0, n);
    r.c = 1.0 - r.c;
    return r;
  }
  const double c = r0 / ((n + 2.0) * (r0 - r1));
  if (!(c > 0.0 && c <= 0.5))
    throw validity_error("revolution_john_solve: b = c regime fails (center outside (0, 1/2])");
  sol.c = c;
  sol.b = c;
  const double a2 = r0 * r0 - 2.0 * r0 * (r0 - r1) * c;
  sol.a = std::sqrt(a2);
  return sol;
}

double revolution_john_center(double r0, double r1, int n) {
  return revolution_john_solve(r0, r1, n).c;
}

double revolution_numeric_oracle(RevolutionKind which, double R0, double R1, int n,
                                 int grid) {
  if (grid < 1000) throw std::domain_error("revolution_numeric_oracle: grid too coarse");
  if (!(R0 > 0.0) || !(R1 > 0.0))
    throw std::domain_error("revolution_numeric_oracle: radii must be positive");
  if (R0 == R1) return 0.5;
  if (which == RevolutionKind::John && R0 < R1)
    return 1.0 - revolution_numeric_oracle(which, R1, R0, n, grid);
  if (which == RevolutionKind::Loewner && R0 < R1)
    return 1.0 - revolution_numeric_oracle(which, R1, R0, n, grid);

  std::function<double(double)> f;
  double lo = 1e-12, hi = 0.5;
  if (which == RevolutionKind::Loewner) {
    const double A = R0 * R0, B = R1 * R1;
    f = [=](double c) { return loewner_log_profile(A, B, n, c); };
    hi = 0.5 - 1e-12;
  } else {
    f = [=](double c) { return john_log_profile(R0, R1, n, c); };
  }
  std::vector<double> v(static_cast<size_t>(grid + 1));
  for (int i = 0; i <= grid; ++i)
    v[static_cast<size_t>(i)] = f(lo + (hi - lo) * i / grid);
  // count strict local minima of the finite profile
  int minima = 0;
  int best = 0;
  for (int i = 0; i <= grid; ++i) {
    if (std::isinf(v[static_cast<size_t>(i)])) continue;
    if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(best)]) best = i;
    if (i > 0 && i < grid) {
      const double tol =
          1e-12 * (1.0 + std::abs(v[static_cast<size_t>(i)]));
      if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(i - 1)] - tol &&
          v[static_cast<size_t>(i)] < v[static_cast<size_t>(i + 1)] - tol)
        ++minima;
    }
  }
  if (minima > 1)
    throw ambiguity_error("revolution_numeric_oracle: profile is not unimodal");
  const double h = (hi - lo) / grid;
  const double a = std::max(lo, lo + (hi - lo) * best / grid - h);
  const double b = std::min(hi, lo + (hi - lo) * best / grid + h);
  return golden_minimize(f, a, b, 1e-10);
}

double revolution_john_numeric(double r0, double r1, int n) {
  if (!(r0 > 0.0) || !(r1 > 0.0))
    throw std::domain_error("revolution_john_numeric: radii must be positive");
  const double rho1 = r1 - r0;
  auto G = [&](double c) {
    const double rho0 = r0 + rho1 * c;
    if (rho0 <= 0.0) return -std::numeric_limits<double>::infinity();
    double b = std::min(c, 1.0 - c);
    if (rho1 != 0.0)
      b = std::min(b, rho0 / (std::sqrt(n + 1.0) * std::abs(rho1)));
    if (b <= 0.0) return -std::numeric_limits<double>::infinity();
    const double a2 = rho0 * rho0 - rho1 * rho1 * b * b;
    if (a2 <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(b) + 0.5 * n * std::log(a2);
  };
  // one-sided derivative of G, analytic per active regime of b*(c)
  auto dG = [&](double c) {
    const double rho0 = r0 + rho1 * c;
    const double bcap =
        rho1 != 0.0 ? rho0 / (std::sqrt(n + 1.0) * std::abs(rho1))
                    : std::numeric_limits<double>::infinity();
    const double b = std::min({c, 1.0 - c, bcap});
    const double a2 = rho0 * rho0 - rho1 * rho1 * b * b;
    if (b == bcap)  // a^2 = rho0^2 n/(n+1): G = (n+1) log rho0 + const
      return (n + 1.0) * rho1 / rho0;
    const double db = (b == c) ? 1.0 : -1.0;
    return db / b + n * (rho0 * rho1 - rho1 * rho1 * b * db) / a2;
  };
  const int grid = 4000;
  const double lo = 1e-12, hi = 1.0 - 1e-12;
  int best = 0;
  double bestv = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double c = lo + (hi - lo) * i / grid;
    const double v = G(c);
    if (v > bestv) {
      bestv = v;
      best = i;
    }
  }
  // bisect the derivative's sign change around the grid maximum; the kink
  // candidates (c = 1/2, regime switches) are handled by the sign test too
  double a = std::max(lo, lo + (hi - lo) * (best - 1) / grid);
  double b = std::min(hi, lo + (hi - lo) * (best + 1) / grid);
  if (dG(a) <= 0.0) return a;  // maximum pinned to the bracket edge
  if (dG(b) >= 0.0) return b;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (dG(mid) > 0.0)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

bool john_certificate_check(const JohnCertificate& cert, double tol) {
  const int m = static_cast<int>(cert.contacts.rows());
  const int d = static_cast<int>(cert.contacts.cols());
  if (m == 0) throw std::domain_error("john_certificate_check: no contacts");
  if (cert.weights.size() != m)
    throw std::domain_error("john_certificate_check: weight count mismatch");
  if ((cert.weights.array() <= 0.0).any())
    throw std::domain_error("john_certificate_check: weights must be positive");
  for (int i = 0; i < m; ++i) {
    if (std::abs(cert.contacts.row(i).norm() - 1.0) > 1e-10)
      throw std::domain_error("john_certificate_check: contacts must be unit vectors");
  }
  const Vec first_moment = cert.contacts.transpose() * cert.weights;
  if (first_moment.norm() > tol) return false;
  Mat second = Mat::Zero(d, d);
  for (int i = 0; i < m; ++i)
    second += cert.weights(i) * cert.contacts.row(i).transpose() * cert.contacts.row(i);
  return (second - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

Vec product_invariant_point(const Vec& pA, const Vec& pB) {
  Vec out(pA.size() + pB.size());
  out.head(pA.size()) = pA;
  out.tail(pB.size()) = pB;
  return out;
}

InclusionReport inclusion_checks(const BodySpec& body, const Vec& g, const Ellipsoid& L,
                                 int trials, std::uint64_t seed) {
  const int d = body.dim();
  if (g.size() != d || L.center.size() != d)
    throw std::domain_error("inclusion_checks: dimension mismatch");
  if (!contains(body, L.center, 1e-9))
    throw std::domain_error("inclusion_checks: Loewner center not interior");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  InclusionReport rep;
  rep.trials = trials;
  const Vec& l = L.center;
  for (int t = 0; t < trials; ++t) {
    Vec theta(d);
    do {
      for (int i = 0; i < d; ++i) theta(i) = gauss(rng);
    } while (theta.norm() < 1e-8);
    theta /= theta.norm();
    const double hK = support(body, theta);
    const double hKom = support(body, -theta);
    const double hKl = hK - l.dot(theta);
    const double hLl = L.centered_support(theta);
    rep.loewner_inner = std::max(rep.loewner_inner, hLl / d - hKl);
    rep.loewner_outer = std::max(rep.loewner_outer, hKl - hLl);
    const double hKg = hK - g.dot(theta);
    const double hgK = g.dot(theta) + hKom;
    rep.centroid_reflection = std::max(rep.centroid_reflection, hKg - d * hgK);
  }
  return rep;
}

}  // namespace cvxasym
