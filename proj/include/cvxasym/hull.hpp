#ifndef CVXASYM_HULL_HPP
#define CVXASYM_HULL_HPP

#include <array>
#include <vector>

#include "cvxasym/bodies.hpp"
#include "cvxasym/types.hpp"

namespace cvxasym {

/// Triangulated 3-d convex hull: outward facet halfspaces <n,x> <= b plus the
/// exact volume and centroid from a tetrahedron fan around an interior point.
struct Hull3 {
  std::vector<std::array<int, 3>> triangles;  // indices into the input points
  Mat normals;                                // one unit row per triangle
  Vec offsets;
  std::vector<int> vertices;  // distinct hull vertex indices
  double volume = 0.0;
  Vec centroid;
};

/// Classical quickhull (incremental, eps-guarded).  Throws degeneracy_error
/// when the input is affinely degenerate; geometry_error when the result
/// fails the 1e-9 containment check.
Hull3 quickhull3(const Mat& points);

/// Convex hull in the plane (Andrew monotone chain), CCW, with outward edge
/// halfspaces, exact area and centroid.
struct Hull2 {
  std::vector<int> vertices;  // CCW order
  Mat normals;
  Vec offsets;
  double area = 0.0;
  Vec centroid;
};

Hull2 hull2d(const Mat& points);

/// Halfspace body for a hull translated so `interior` sits at the origin.
/// d(p1, p2) is translation invariant, so callers shift their points the
/// same way.
BodySpec hull_halfspace_body(const Mat& normals, const Vec& offsets, const Vec& interior);

}  // namespace cvxasym

#endif
