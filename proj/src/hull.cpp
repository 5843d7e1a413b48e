#include "cvxasym/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "cvxasym/errors.hpp"

namespace cvxasym {

namespace {

using V3 = Eigen::Vector3d;

struct Face {
  int v[3];
  V3 n;  // unit outward
  double b = 0.0;
  bool alive = true;
};

V3 row3(const Mat& m, int i) { return m.row(i).transpose(); }

void orient_face(Face& f, const Mat& pts, const V3& interior) {
  const V3 a = row3(pts, f.v[0]), b = row3(pts, f.v[1]), c = row3(pts, f.v[2]);
  V3 n = (b - a).cross(c - a);
  const double len = n.norm();
  if (len == 0.0) throw degeneracy_error("quickhull3: zero-area face");
  n /= len;
  double off = n.dot(a);
  if (n.dot(interior) > off) {
    std::swap(f.v[1], f.v[2]);
    n = -n;
    off = -off;
  }
  f.n = n;
  f.b = off;
}

}  // namespace

Hull3 quickhull3(const Mat& points) {
  const int m = static_cast<int>(points.rows());
  if (points.cols() != 3) throw std::domain_error("quickhull3: points must be 3-d");
  if (m < 4) throw std::domain_error("quickhull3: need at least 4 points");

  Vec lo = points.colwise().minCoeff(), hi = points.colwise().maxCoeff();
  const double scale = std::max((hi - lo).norm(), 1e-30);
  const double eps = 1e-12 * scale;

  // initial tetrahedron from extremes
  int i0 = 0, i1 = 0;
  double best = -1.0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const double d = (points.row(a) - points.row(b)).norm();
      if (d > best) {
        best = d;
        i0 = a;
        i1 = b;
      }
    }
  if (best <= eps) throw degeneracy_error("quickhull3: all points coincide");
  const V3 p0 = row3(points, i0), p1 = row3(points, i1);
  const V3 dir = (p1 - p0).normalized();
  int i2 = -1;
  best = eps;
  for (int a = 0; a < m; ++a) {
    const V3 r = row3(points, a) - p0;
    const double d = (r - r.dot(dir) * dir).norm();
    if (d > best) {
      best = d;
      i2 = a;
    }
  }
  if (i2 < 0) throw degeneracy_error("quickhull3: points are collinear");
  const V3 p2 = row3(points, i2);
  const V3 nrm = (p1 - p0).cross(p2 - p0).normalized();
  int i3 = -1;
  best = eps;
  for (int a = 0; a < m; ++a) {
    const double d = std::abs(nrm.dot(row3(points, a) - p0));
    if (d > best) {
      best = d;
      i3 = a;
    }
  }
  if (i3 < 0) throw degeneracy_error("quickhull3: points are coplanar");

  const V3 interior =
      0.25 * (p0 + p1 + p2 + row3(points, i3));
  std::vector<Face> faces;
  const int t[4][3] = {{i0, i1, i2}, {i0, i1, i3}, {i0, i2, i3}, {i1, i2, i3}};
  for (auto& tri : t) {
    Face f;
    f.v[0] = tri[0];
    f.v[1] = tri[1];
    f.v[2] = tri[2];
    orient_face(f, points, interior);
    faces.push_back(f);
  }

  // incremental insertion, farthest violator first
  std::vector<char> done(static_cast<size_t>(m), 0);
  done[static_cast<size_t>(i0)] = done[static_cast<size_t>(i1)] = 1;
  done[static_cast<size_t>(i2)] = done[static_cast<size_t>(i3)] = 1;
  for (long guard = 0; guard < 4L * m + 16; ++guard) {
    int pick = -1;
    double worst = eps;
    for (int a = 0; a < m; ++a) {
      if (done[static_cast<size_t>(a)]) continue;
      double viol = -std::numeric_limits<double>::infinity();
      for (const Face& f : faces) {
        if (!f.alive) continue;
        viol = std::max(viol, f.n.dot(row3(points, a)) - f.b);
      }
      if (viol <= eps) {
        done[static_cast<size_t>(a)] = 1;  // already inside
        continue;
      }
      if (viol > worst) {
        worst = viol;
        pick = a;
      }
    }
    if (pick < 0) break;
    done[static_cast<size_t>(pick)] = 1;
    const V3 p = row3(points, pick);
    // visible faces and their horizon
    std::map<std::pair<int, int>, int> edge_owner;  // directed edge -> face idx
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      Face& f = faces[static_cast<size_t>(fi)];
      if (!f.alive) continue;
      if (f.n.dot(p) - f.b > eps) {
        visible.push_back(fi);
      } else {
        for (int e = 0; e < 3; ++e)
          edge_owner[{f.v[e], f.v[(e + 1) % 3]}] = fi;
      }
    }
    std::vector<std::pair<int, int>> horizon;
    for (int fi : visible) {
      Face& f = faces[static_cast<size_t>(fi)];
      for (int e = 0; e < 3; ++e) {
        const int u = f.v[e], w = f.v[(e + 1) % 3];
        if (edge_owner.count({w, u})) horizon.emplace_back(u, w);
      }
      f.alive = false;
    }
    for (auto& [u, w] : horizon) {
      Face f;
      f.v[0] = u;
      f.v[1] = w;
      f.v[2] = pick;
      orient_face(f, points, interior);
      faces.push_back(f);
    }
  }

  Hull3 h;
  std::vector<int> alive;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
    if (faces[static_cast<size_t>(fi)].alive) alive.push_back(fi);
  h.normals.resize(static_cast<int>(alive.size()), 3);
  h.offsets.resize(static_cast<int>(alive.size()));
  std::vector<char> used(static_cast<size_t>(m), 0);
  double vol = 0.0;
  V3 cent = V3::Zero();
  for (int k = 0; k < static_cast<int>(alive.size()); ++k) {
    const Face& f = faces[static_cast<size_t>(alive[static_cast<size_t>(k)])];
    h.triangles.push_back({f.v[0], f.v[1], f.v[2]});
    h.normals.row(k) = f.n.transpose();
    h.offsets(k) = f.b;
    for (int e = 0; e < 3; ++e) used[static_cast<size_t>(f.v[e])] = 1;
    const V3 a = row3(points, f.v[0]), b = row3(points, f.v[1]), c = row3(points, f.v[2]);
    const double v6 = (a - interior).cross(b - interior).dot(c - interior);
    vol += v6 / 6.0;
    cent += (v6 / 6.0) * 0.25 * (a + b + c + interior);
  }
  for (int a = 0; a < m; ++a)
    if (used[static_cast<size_t>(a)]) h.vertices.push_back(a);
  if (vol <= 0.0) throw degeneracy_error("quickhull3: degenerate hull volume");
  h.volume = vol;
  h.centroid = (cent / vol);

  // containment audit
  for (int a = 0; a < m; ++a) {
    const Vec r = h.normals * points.row(a).transpose() - h.offsets;
    if (r.maxCoeff() > 1e-9 * scale)
      throw geometry_error("quickhull3: containment check failed");
  }
  return h;
}

Hull2 hull2d(const Mat& points) {
  const int m = static_cast<int>(points.rows());
  if (points.cols() != 2) throw std::domain_error("hull2d: points must be 2-d");
  if (m < 3) throw std::domain_error("hull2d: need at least 3 points");
  std::vector<int> idx(static_cast<size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (points(a, 0) != points(b, 0)) return points(a, 0) < points(b, 0);
    return points(a, 1) < points(b, 1);
  });
  auto cross = [&](int o, int a, int b) {
    return (points(a, 0) - points(o, 0)) * (points(b, 1) - points(o, 1)) -
           (points(a, 1) - points(o, 1)) * (points(b, 0) - points(o, 0));
  };
  std::vector<int> hull(2 * static_cast<size_t>(m));
  size_t k = 0;
  for (int i = 0; i < m; ++i) {  // lower chain
    const int a = idx[static_cast<size_t>(i)];
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], a) <= 0) --k;
    hull[k++] = a;
  }
  const size_t t = k + 1;
  for (int i = m - 2; i >= 0; --i) {  // upper chain
    const int a = idx[static_cast<size_t>(i)];
    while (k >= t && cross(hull[k - 2], hull[k - 1], a) <= 0) --k;
    hull[k++] = a;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw degeneracy_error("hull2d: points are collinear");

  Hull2 h;
  h.vertices = hull;
  const int nv = static_cast<int>(hull.size());
  h.normals.resize(nv, 2);
  h.offsets.resize(nv);
  double area2 = 0.0;
  Eigen::Vector2d cent = Eigen::Vector2d::Zero();
  for (int i = 0; i < nv; ++i) {
    const int a = hull[static_cast<size_t>(i)], b = hull[static_cast<size_t>((i + 1) % nv)];
    const Eigen::Vector2d pa = points.row(a), pb = points.row(b);
    Eigen::Vector2d nrm(pb.y() - pa.y(), pa.x() - pb.x());  // outward for CCW
    const double len = nrm.norm();
    if (len == 0.0) throw degeneracy_error("hull2d: repeated vertex");
    nrm /= len;
    h.normals.row(i) = nrm.transpose();
    h.offsets(i) = nrm.dot(pa);
    const double c2 = pa.x() * pb.y() - pb.x() * pa.y();
    area2 += c2;
    cent += c2 * (pa + pb) / 3.0;
  }
  if (area2 <= 0.0) throw degeneracy_error("hull2d: degenerate area");
  h.area = 0.5 * area2;
  h.centroid = cent / (2.0 * h.area);
  return h;
}

BodySpec hull_halfspace_body(const Mat& normals, const Vec& offsets, const Vec& interior) {
  Vec shifted = offsets - normals * interior;
  if ((shifted.array() <= 0.0).any())
    throw degeneracy_error("hull_halfspace_body: reference point not interior");
  return BodySpec::halfspaces(normals, shifted);
}

}  // namespace cvxasym
