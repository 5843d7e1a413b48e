#include "cvxasym/asymmetry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cvxasym/centroids.hpp"
#include "cvxasym/ellipsoids.hpp"
#include "cvxasym/errors.hpp"

namespace cvxasym {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// one-sided boundary distance from an interior anchor along direction u
double ray_extent(const BodySpec& body, const Vec& anchor, const Vec& u, double step0,
                  double resolution) {
  double t_in = 0.0;
  double t = step0;
  int grow = 0;
  while (contains(body, anchor + t * u, 0.0)) {
    t_in = t;
    t *= 2.0;
    if (++grow > 200) throw geometry_error("chord_length: bracket failed to close");
  }
  double t_out = t;
  while (t_out - t_in > resolution) {
    const double mid = 0.5 * (t_in + t_out);
    if (contains(body, anchor + mid * u, 0.0))
      t_in = mid;
    else
      t_out = mid;
  }
  return 0.5 * (t_in + t_out);
}

double john_or_numeric(double r0, double r1, int n) {
  try {
    return revolution_john_center(r0, r1, n);
  } catch (const validity_error&) {
    return revolution_john_numeric(r0, r1, n);
  }
}

double loewner_oriented(double R0, double R1, int n) {
  if (R0 >= R1) return revolution_loewner_center(R0, R1, n);
  return 1.0 - revolution_loewner_center(R1, R0, n);
}

}  // namespace

double chord_length(const BodySpec& body, const Vec& p1, const Vec& p2, double tol) {
  if (p1.size() != body.dim() || p2.size() != body.dim())
    throw std::domain_error("chord_length: dimension mismatch");
  const double d0 = (p2 - p1).norm();
  if (d0 == 0.0) throw std::domain_error("chord_length: points coincide");
  if (!(tol > 0.0)) throw std::domain_error("chord_length: tol must be positive");
  const double margin = tol * d0;
  if (!contains(body, p1, -margin) || !contains(body, p2, -margin))
    throw std::domain_error("chord_length: points must be strictly interior");
  const Vec u = (p2 - p1) / d0;

  if (const auto* hs = std::get_if<HalfspaceBody>(&body.node())) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < hs->normals.rows(); ++i) {
      const double den = hs->normals.row(i).dot(u);
      const double num = hs->offsets(i) - hs->normals.row(i).dot(p1);
      if (std::abs(den) < 1e-14) {
        if (num < 0.0) throw geometry_error("chord_length: line misses the body");
        continue;
      }
      const double s = num / den;
      if (den > 0.0)
        hi = std::min(hi, s);
      else
        lo = std::max(lo, s);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi <= lo)
      throw geometry_error("chord_length: clipped chord is empty or unbounded");
    return hi - lo;
  }

  const double fwd = ray_extent(body, p1, u, d0, tol * d0);
  const double bwd = ray_extent(body, p1, -u, d0, tol * d0);
  return fwd + bwd;
}

AsymmetryResult asymmetry_d(const BodySpec& body, const Vec& p1, const Vec& p2) {
  AsymmetryResult res;
  res.p1 = p1;
  res.p2 = p2;
  Vec lo, hi;
  bounding_box(body, lo, hi);
  const double diameter = (hi - lo).norm();
  const double dist = (p2 - p1).norm();
  if (dist <= 1e-12 * diameter) {
    res.d = 0.0;
    return res;
  }
  const double chord = chord_length(body, p1, p2);
  res.chord = chord;
  res.d = std::min(dist / chord, 1.0);
  return res;
}

double square_corner_formula(double x1, double y1, double x2, double y2) {
  return std::abs(x2 - x1) * std::abs(y2 - y1) / std::abs(x1 * y2 - x2 * y1);
}

double square_chord_d(double x1, double y1, double x2, double y2) {
  auto interior = [](double v) { return v > 0.0 && v < 1.0; };
  if (!interior(x1) || !interior(y1) || !interior(x2) || !interior(y2))
    throw std::domain_error("square_chord_d: points must be interior to [0,1]^2");
  const double dx = x2 - x1, dy = y2 - y1;
  if (dx == 0.0 && dy == 0.0)
    throw std::domain_error("square_chord_d: points must be distinct");
  if (std::abs(x1 * y2 - x2 * y1) <= 1e-14)
    throw formula_degenerate_error("square_chord_d: line passes through the corner");
  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  if (dx != 0.0) {
    const double t0 = (0.0 - x1) / dx, t1 = (1.0 - x1) / dx;
    tmin = std::max(tmin, std::min(t0, t1));
    tmax = std::min(tmax, std::max(t0, t1));
  }
  if (dy != 0.0) {
    const double t0 = (0.0 - y1) / dy, t1 = (1.0 - y1) / dy;
    tmin = std::max(tmin, std::min(t0, t1));
    tmax = std::min(tmax, std::max(t0, t1));
  }
  return 1.0 / (tmax - tmin);  // = |p1-p2| / chord in the line parameter
}

FamilyPoints family_points(ProductFamily family, int n) {
  if (n < 6) throw std::domain_error("family_d: n must be >= 6");
  const int k = n / 2;
  const int m1 = k - 1;
  const int m2 = (n % 2 == 0) ? k - 1 : k;
  FamilyPoints fp;
  fp.m1 = m1;
  fp.m2 = m2;
  switch (family) {
    case ProductFamily::F: {
      fp.x1 = centroid_height_family(CentroidFamily::F1, m1);
      fp.y1 = centroid_height_family(CentroidFamily::F2, m2);
      fp.x2 = 0.5;
      const double r = std::sqrt(m2 / (2.0 * kE * kPi));
      fp.y2 = john_or_numeric(r, 0.5, m2);
      return fp;
    }
    case ProductFamily::W: {
      fp.x1 = centroid_height_family(CentroidFamily::W1, m1);
      fp.y1 = centroid_height_family(CentroidFamily::W2, m2);
      fp.x2 = 0.5;
      fp.y2 = loewner_oriented(m2 / kE, std::sqrt(static_cast<double>(m2)), m2);
      return fp;
    }
    case ProductFamily::M: {
      fp.x1 = revolution_john_center(1.0, 1.0 / m1, m1);
      fp.y1 = 0.5;
      fp.x2 = 0.5;
      fp.y2 = revolution_loewner_center(1.0, 1.0 / m2, m2);
      return fp;
    }
  }
  throw std::domain_error("family_points: unknown family");
}

SweepRecord family_d(ProductFamily family, int n) {
  const FamilyPoints fp = family_points(family, n);
  double d;
  try {
    d = square_chord_d(fp.x1, fp.y1, fp.x2, fp.y2);
  } catch (const formula_degenerate_error&) {
    if (n > 8) throw;
    const MaterializedFamily mf = materialize_family(family, n);
    d = asymmetry_d(mf.body, mf.p1, mf.p2).d;
  }
  SweepRecord rec;
  rec.family = family;
  rec.n = n;
  rec.point1 = fp.x1;
  rec.point2 = fp.y2;
  rec.d = d;
  rec.gap = n * (1.0 - d);
  return rec;
}

MaterializedFamily materialize_family(ProductFamily family, int n) {
  if (n < 6 || n > 8)
    throw std::domain_error("materialize_family: only small products (6 <= n <= 8)");
  const FamilyPoints fp = family_points(family, n);
  const int m1 = fp.m1, m2 = fp.m2;
  BodySpec s1 = BodySpec::ball(1), s2 = BodySpec::ball(1);  // placeholders
  switch (family) {
    case ProductFamily::F:
      s1 = BodySpec::suspension(BodySpec::cube(m1), BodySpec::ball(m1));
      s2 = BodySpec::suspension(BodySpec::ball(m2, std::sqrt(m2 / (2.0 * kE * kPi))),
                                BodySpec::cube(m2, 0.5));
      break;
    case ProductFamily::W:
      s1 = BodySpec::suspension(BodySpec::ball(m1),
                                BodySpec::cube(m1, 1.0 / std::sqrt(static_cast<double>(m1))));
      s2 = BodySpec::suspension(BodySpec::cross_polytope(m2, m2 / kE),
                                BodySpec::cube(m2));
      break;
    case ProductFamily::M:
      s1 = BodySpec::suspension(BodySpec::ball(m1), BodySpec::simplex(m1));
      s2 = BodySpec::suspension(BodySpec::simplex(m2), BodySpec::ball(m2, 1.0 / m2));
      break;
  }
  MaterializedFamily mf{BodySpec::product(s1, s2), Vec::Zero(n), Vec::Zero(n)};
  const int axis1 = m1;      // last coordinate of the first factor block
  const int axis2 = n - 1;   // last coordinate of the second factor block
  mf.p1(axis1) = fp.x1;
  mf.p1(axis2) = fp.y1;
  mf.p2(axis1) = fp.x2;
  mf.p2(axis2) = fp.y2;
  return mf;
}

bool bound_check(double d, int n) {
  if (d < 0.0 || d > 1.0) throw std::domain_error("bound_check: d must lie in [0,1]");
  return d <= 1.0 - 2.0 / (n + 1.0) + 1e-9;
}

std::string family_name(ProductFamily f) {
  switch (f) {
    case ProductFamily::F:
      return "F";
    case ProductFamily::W:
      return "W";
    case ProductFamily::M:
      return "M";
  }
  return "?";
}

}  // namespace cvxasym
