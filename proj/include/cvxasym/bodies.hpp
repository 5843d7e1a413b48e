#ifndef CVXASYM_BODIES_HPP
#define CVXASYM_BODIES_HPP

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "cvxasym/scalarmath.hpp"
#include "cvxasym/types.hpp"

namespace cvxasym {

class BodySpec;
using BodyPtr = std::shared_ptr<const BodySpec>;

/// lambda * B^n_p for p in {1, 2, inf}.
struct ScaledStandard {
  PNorm p;
  double scale;
  int dim;
};

/// Regular n-simplex with vertices on the unit sphere (optionally scaled).
/// Vertices are fixed at construction so membership tests stay cheap.
struct SimplexBody {
  int dim;
  double scale;
  Mat vertices;  // (dim+1) x dim, rows are vertices of the unit-scale simplex
};

/// conv((base, 0), (top, height)) in dimension base.dim + 1.
struct SuspensionBody {
  BodyPtr base;
  BodyPtr top;
  double height;
};

struct ProductBody {
  BodyPtr a;
  BodyPtr b;
};

/// Intersection of <a_i, x> <= b_i with unit normals and positive offsets.
struct HalfspaceBody {
  Mat normals;  // rows
  Vec offsets;
};

struct PointHullBody {
  Mat points;  // rows
};

class BodySpec {
 public:
  using Node = std::variant<ScaledStandard, SimplexBody, SuspensionBody,
                            ProductBody, HalfspaceBody, PointHullBody>;

  static BodySpec scaled_standard(PNorm p, double scale, int dim);
  static BodySpec ball(int dim, double scale = 1.0);
  static BodySpec cube(int dim, double scale = 1.0);
  static BodySpec cross_polytope(int dim, double scale = 1.0);
  static BodySpec simplex(int dim, double scale = 1.0);
  static BodySpec suspension(BodySpec base, BodySpec top, double height = 1.0);
  static BodySpec product(BodySpec a, BodySpec b);
  static BodySpec halfspaces(Mat normals, Vec offsets);
  static BodySpec point_hull(Mat points);

  int dim() const { return dim_; }
  const Node& node() const { return *node_; }

 private:
  BodySpec(Node n, int d);
  std::shared_ptr<const Node> node_;
  int dim_;
};

/// Support function h_K(theta) = max_{x in K} <x, theta>.  Closed forms for
/// every variant except HalfspaceBody, which runs a small LP.
double support(const BodySpec& body, const Vec& direction);

/// Membership with the body inflated by tol in every support direction
/// tested (negative tol deflates).  Exact rules per variant; suspension
/// sections use the slice formula (1-s)K + sL.
bool contains(const BodySpec& body, const Vec& point, double tol);

/// Vertices of the regular n-simplex: unit rows, pairwise dot -1/n, zero sum.
Mat simplex_vertices(int n);

/// Uniform points in the body by rejection from the support bounding box.
/// Deterministic for a given seed.  Restricted to dim <= 8.
std::vector<Vec> sample_interior(const BodySpec& body, long count, std::uint64_t seed);

/// Axis-aligned bounding box from 2n support evaluations: [lo, hi] per axis.
void bounding_box(const BodySpec& body, Vec& lo, Vec& hi);

}  // namespace cvxasym

#endif
