#include "cvxasym/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cvxasym/errors.hpp"
#include "cvxasym/linprog.hpp"

namespace cvxasym {

namespace {

double dual_norm(PNorm p, const Vec& theta) {
  switch (p) {
    case PNorm::One:
      return theta.cwiseAbs().maxCoeff();
    case PNorm::Two:
      return theta.norm();
    case PNorm::Inf:
      return theta.cwiseAbs().sum();
  }
  throw std::domain_error("unsupported norm");
}

// Signed facet margin: >= 0 inside, 0 on the boundary, measured against unit
// support directions.
double standard_margin(PNorm p, double scale, const Vec& x) {
  switch (p) {
    case PNorm::One:
      return (scale - x.cwiseAbs().sum()) / std::sqrt(static_cast<double>(x.size()));
    case PNorm::Two:
      return scale - x.norm();
    case PNorm::Inf:
      return scale - x.cwiseAbs().maxCoeff();
  }
  throw std::domain_error("unsupported norm");
}

double simplex_margin(const Mat& verts, double scale, const Vec& x) {
  const int n = static_cast<int>(verts.cols());
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < verts.rows(); ++i)
    m = std::min(m, scale / n + verts.row(i).dot(x));
  return m;
}

double dist_to_box(const Vec& x, double a) {
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    const double e = std::abs(x(i)) - a;
    if (e > 0.0) s += e * e;
  }
  return std::sqrt(s);
}

double l1_deficit_over_box(const Vec& x, double b) {
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += std::max(std::abs(x(i)) - b, 0.0);
  return s;
}

// Euclidean distance to the l1 ball of radius a (projection by soft threshold)
double dist_to_l1_ball(const Vec& x, double a) {
  const double l1 = x.cwiseAbs().sum();
  if (l1 <= a) return 0.0;
  std::vector<double> u(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) u[static_cast<size_t>(i)] = std::abs(x(i));
  std::sort(u.begin(), u.end(), std::greater<double>());
  double prefix = 0.0, theta = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    prefix += u[k];
    const double cand = (prefix - a) / static_cast<double>(k + 1);
    if (k + 1 == u.size() || u[k + 1] <= cand) {
      theta = cand;
      break;
    }
  }
  double d2 = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    const double clip = std::min(std::abs(x(i)), theta);
    d2 += clip * clip;
  }
  return std::sqrt(d2);
}

// Distance to a scaled regular simplex by projecting onto every face.
double dist_to_simplex(const Mat& verts, double scale, const Vec& x) {
  const int m = static_cast<int>(verts.rows());
  if (m > 8) throw geometry_error("dist_to_simplex: dimension too large");
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    Mat V(k, verts.cols());
    for (int i = 0; i < k; ++i) V.row(i) = scale * verts.row(idx[static_cast<size_t>(i)]);
    // projection onto the affine hull: KKT system for min |x - V' l|, sum l = 1
    Mat K = Mat::Zero(k + 1, k + 1);
    K.topLeftCorner(k, k) = V * V.transpose();
    K.topRightCorner(k, 1).setOnes();
    K.bottomLeftCorner(1, k).setOnes();
    Vec rhs(k + 1);
    rhs.head(k) = V * x;
    rhs(k) = 1.0;
    Eigen::FullPivLU<Mat> lu(K);
    if (!lu.isInvertible()) continue;
    Vec lam = lu.solve(rhs).head(k);
    if ((lam.array() < -1e-12).any()) continue;
    best = std::min(best, (x - V.transpose() * lam).norm());
  }
  return best;
}

struct CapKind {
  enum Kind { Ball, Cube, Cross, Simplex } kind;
  double scale;
  const Mat* verts = nullptr;
};

CapKind cap_of(const BodySpec& b) {
  if (const auto* s = std::get_if<ScaledStandard>(&b.node())) {
    switch (s->p) {
      case PNorm::One:
        return {CapKind::Cross, s->scale, nullptr};
      case PNorm::Two:
        return {CapKind::Ball, s->scale, nullptr};
      case PNorm::Inf:
        return {CapKind::Cube, s->scale, nullptr};
    }
  }
  if (const auto* s = std::get_if<SimplexBody>(&b.node()))
    return {CapKind::Simplex, s->scale, &s->vertices};
  throw geometry_error("suspension section: caps must be standard bodies or simplices");
}

double single_cap_margin(const CapKind& c, double scale, const Vec& x) {
  switch (c.kind) {
    case CapKind::Ball:
      return standard_margin(PNorm::Two, scale, x);
    case CapKind::Cube:
      return standard_margin(PNorm::Inf, scale, x);
    case CapKind::Cross:
      return standard_margin(PNorm::One, scale, x);
    case CapKind::Simplex:
      return simplex_margin(*c.verts, scale, x);
  }
  throw geometry_error("unreachable");
}

// Signed margin of the Minkowski section (1-s)K + sL.  Exact sign; interior
// depth uses the gauge natural to each pair.
double section_margin(const CapKind& k0, const CapKind& k1, double s, const Vec& x) {
  const double a0 = (1.0 - s) * k0.scale;
  const double a1 = s * k1.scale;
  if (k0.kind == k1.kind) {
    if (k0.kind == CapKind::Simplex && k0.verts != k1.verts &&
        (k0.verts->rows() != k1.verts->rows()))
      throw geometry_error("suspension section: mismatched simplex caps");
    CapKind c = k0;
    return single_cap_margin(c, a0 + a1, x);
  }
  auto ordered = [&](CapKind::Kind ka, CapKind::Kind kb) {
    return (k0.kind == ka && k1.kind == kb);
  };
  // ball + polytope: Euclidean distance to the polytope part
  if (ordered(CapKind::Cube, CapKind::Ball) || ordered(CapKind::Ball, CapKind::Cube)) {
    const double box = k0.kind == CapKind::Cube ? a0 : a1;
    const double ball = k0.kind == CapKind::Ball ? a0 : a1;
    const double d = dist_to_box(x, box);
    return d > 0.0 ? ball - d : ball + standard_margin(PNorm::Inf, box, x);
  }
  if (ordered(CapKind::Cross, CapKind::Ball) || ordered(CapKind::Ball, CapKind::Cross)) {
    const double cross = k0.kind == CapKind::Cross ? a0 : a1;
    const double ball = k0.kind == CapKind::Ball ? a0 : a1;
    const double d = dist_to_l1_ball(x, cross);
    return d > 0.0 ? ball - d : ball + standard_margin(PNorm::One, cross, x);
  }
  if (ordered(CapKind::Simplex, CapKind::Ball) || ordered(CapKind::Ball, CapKind::Simplex)) {
    const CapKind& sx = k0.kind == CapKind::Simplex ? k0 : k1;
    const double simp = k0.kind == CapKind::Simplex ? a0 : a1;
    const double ball = k0.kind == CapKind::Ball ? a0 : a1;
    if (simp <= 0.0) return ball - x.norm();
    const double d = dist_to_simplex(*sx.verts, simp, x);
    return d > 0.0 ? ball - d : ball + simplex_margin(*sx.verts, simp, x);
  }
  // cross + cube:  x in aB1 + bBinf  iff  sum_i max(|x_i|-b, 0) <= a
  if (ordered(CapKind::Cross, CapKind::Cube) || ordered(CapKind::Cube, CapKind::Cross)) {
    const double cross = k0.kind == CapKind::Cross ? a0 : a1;
    const double box = k0.kind == CapKind::Cube ? a0 : a1;
    const double deficit = l1_deficit_over_box(x, box);
    return deficit > 0.0 ? cross - deficit
                         : cross + standard_margin(PNorm::Inf, box, x);
  }
  throw geometry_error("suspension section: unsupported cap pair");
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

BodySpec::BodySpec(Node n, int d) : node_(std::make_shared<Node>(std::move(n))), dim_(d) {}

BodySpec BodySpec::scaled_standard(PNorm p, double scale, int dim) {
  if (dim < 1) throw std::domain_error("BodySpec: dimension must be >= 1");
  if (!(scale > 0.0)) throw std::domain_error("BodySpec: scale must be positive");
  return BodySpec(ScaledStandard{p, scale, dim}, dim);
}

BodySpec BodySpec::ball(int dim, double scale) {
  return scaled_standard(PNorm::Two, scale, dim);
}
BodySpec BodySpec::cube(int dim, double scale) {
  return scaled_standard(PNorm::Inf, scale, dim);
}
BodySpec BodySpec::cross_polytope(int dim, double scale) {
  return scaled_standard(PNorm::One, scale, dim);
}

BodySpec BodySpec::simplex(int dim, double scale) {
  if (dim < 1) throw std::domain_error("BodySpec: dimension must be >= 1");
  if (!(scale > 0.0)) throw std::domain_error("BodySpec: scale must be positive");
  return BodySpec(SimplexBody{dim, scale, simplex_vertices(dim)}, dim);
}

BodySpec BodySpec::suspension(BodySpec base, BodySpec top, double height) {
  if (base.dim() != top.dim())
    throw std::domain_error("BodySpec: suspension caps must share a dimension");
  if (!(height > 0.0)) throw std::domain_error("BodySpec: height must be positive");
  const int d = base.dim() + 1;
  return BodySpec(SuspensionBody{std::make_shared<BodySpec>(std::move(base)),
                                 std::make_shared<BodySpec>(std::move(top)), height},
                  d);
}

BodySpec BodySpec::product(BodySpec a, BodySpec b) {
  const int d = a.dim() + b.dim();
  return BodySpec(ProductBody{std::make_shared<BodySpec>(std::move(a)),
                              std::make_shared<BodySpec>(std::move(b))},
                  d);
}

BodySpec BodySpec::halfspaces(Mat normals, Vec offsets) {
  if (normals.rows() != offsets.size() || normals.rows() == 0)
    throw std::domain_error("BodySpec: normals/offsets size mismatch");
  if ((offsets.array() <= 0.0).any())
    throw std::domain_error("BodySpec: offsets must be positive (origin interior)");
  for (int i = 0; i < normals.rows(); ++i) {
    const double nn = normals.row(i).norm();
    if (std::abs(nn - 1.0) > 1e-9)
      throw std::domain_error("BodySpec: halfspace normals must be unit vectors");
  }
  const int d = static_cast<int>(normals.cols());
  return BodySpec(HalfspaceBody{std::move(normals), std::move(offsets)}, d);
}

BodySpec BodySpec::point_hull(Mat points) {
  if (points.rows() < 2) throw std::domain_error("BodySpec: need at least two points");
  const int d = static_cast<int>(points.cols());
  return BodySpec(PointHullBody{std::move(points)}, d);
}

double support(const BodySpec& body, const Vec& direction) {
  if (direction.size() != body.dim())
    throw std::domain_error("support: direction dimension mismatch");
  if (direction.norm() == 0.0) throw std::domain_error("support: zero direction");
  const auto& n = body.node();
  if (const auto* s = std::get_if<ScaledStandard>(&n))
    return s->scale * dual_norm(s->p, direction);
  if (const auto* s = std::get_if<SimplexBody>(&n))
    return s->scale * (s->vertices * direction).maxCoeff();
  if (const auto* s = std::get_if<SuspensionBody>(&n)) {
    const Vec head = direction.head(direction.size() - 1);
    const double t = direction(direction.size() - 1);
    double h0, h1;
    if (head.norm() == 0.0) {
      h0 = 0.0;
      h1 = 0.0;
    } else {
      h0 = support(*s->base, head);
      h1 = support(*s->top, head);
    }
    return std::max(h0, h1 + s->height * t);
  }
  if (const auto* s = std::get_if<ProductBody>(&n)) {
    const int da = s->a->dim();
    const Vec ta = direction.head(da), tb = direction.tail(direction.size() - da);
    double h = 0.0;
    if (ta.norm() > 0.0) h += support(*s->a, ta);
    if (tb.norm() > 0.0) h += support(*s->b, tb);
    return h;
  }
  if (const auto* s = std::get_if<HalfspaceBody>(&n)) {
    const LpResult r = lp_maximize(s->normals, s->offsets, direction);
    if (!r.feasible) throw geometry_error("support: halfspace body is empty");
    if (!r.bounded) throw geometry_error("support: halfspace body is unbounded");
    return r.objective;
  }
  const auto& ph = std::get<PointHullBody>(n);
  return (ph.points * direction).maxCoeff();
}

bool contains(const BodySpec& body, const Vec& point, double tol) {
  if (point.size() != body.dim())
    throw std::domain_error("contains: point dimension mismatch");
  const auto& n = body.node();
  if (const auto* s = std::get_if<ScaledStandard>(&n))
    return standard_margin(s->p, s->scale, point) >= -tol;
  if (const auto* s = std::get_if<SimplexBody>(&n))
    return simplex_margin(s->vertices, s->scale, point) >= -tol;
  if (const auto* s = std::get_if<SuspensionBody>(&n)) {
    const double t = point(point.size() - 1);
    const double h = s->height;
    if (std::min(t, h - t) < -tol) return false;
    const double sfrac = std::clamp(t / h, 0.0, 1.0);
    const Vec head = point.head(point.size() - 1);
    return section_margin(cap_of(*s->base), cap_of(*s->top), sfrac, head) >= -tol;
  }
  if (const auto* s = std::get_if<ProductBody>(&n)) {
    const int da = s->a->dim();
    return contains(*s->a, point.head(da), tol) &&
           contains(*s->b, point.tail(point.size() - da), tol);
  }
  if (const auto* s = std::get_if<HalfspaceBody>(&n))
    return ((s->offsets - s->normals * point).array() >= -tol).all();
  const auto& ph = std::get<PointHullBody>(n);
  const double scale = 1.0 + ph.points.cwiseAbs().maxCoeff();
  return convex_combination_residual(ph.points, point) <=
         std::max(tol, 0.0) + 1e-9 * scale;
}

Mat simplex_vertices(int n) {
  if (n < 1) throw std::domain_error("simplex_vertices: n must be >= 1");
  Mat ones = Mat::Ones(n + 1, 1);
  Eigen::HouseholderQR<Mat> qr(ones);
  Mat Q = qr.householderQ();
  Mat basis = Q.rightCols(n);  // orthonormal basis of the hyperplane sum x_i = 0
  const double r = std::sqrt(static_cast<double>(n + 1) / n);
  return r * basis;
}

void bounding_box(const BodySpec& body, Vec& lo, Vec& hi) {
  const int d = body.dim();
  lo.resize(d);
  hi.resize(d);
  Vec e = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    e(i) = 1.0;
    hi(i) = support(body, e);
    e(i) = -1.0;
    lo(i) = -support(body, e);
    e(i) = 0.0;
  }
}

std::vector<Vec> sample_interior(const BodySpec& body, long count, std::uint64_t seed) {
  if (count < 1) throw std::domain_error("sample_interior: count must be >= 1");
  if (body.dim() > 8)
    throw std::domain_error("sample_interior: rejection sampling limited to dim <= 8");
  Vec lo, hi;
  bounding_box(body, lo, hi);
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(count));
  const int d = body.dim();
  Vec x(d);
  long draws = 0;
  while (static_cast<long>(out.size()) < count) {
    for (int i = 0; i < d; ++i) x(i) = lo(i) + (hi(i) - lo(i)) * uniform01(rng);
    ++draws;
    if (contains(body, x, 0.0)) out.push_back(x);
    if (draws % 1000000 == 0 &&
        static_cast<double>(out.size()) < 1e-6 * static_cast<double>(draws))
      throw infeasibility_error("sample_interior: acceptance rate below 1e-6");
  }
  return out;
}

}  // namespace cvxasym
