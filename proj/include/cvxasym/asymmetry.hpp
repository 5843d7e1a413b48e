#ifndef CVXASYM_ASYMMETRY_HPP
#define CVXASYM_ASYMMETRY_HPP

#include <optional>
#include <string>

#include "cvxasym/bodies.hpp"
#include "cvxasym/types.hpp"

namespace cvxasym {

struct AsymmetryResult {
  double d = 0.0;   // in [0, 1]
  Vec p1;
  Vec p2;
  std::optional<double> chord;  // absent when the points coincide
};

/// Length of the full chord of the body along the line through p1 and p2.
/// HalfspaceBody is clipped exactly; everything else is resolved by bisection
/// on membership, two-sided, to resolution tol * |p1 - p2|.
double chord_length(const BodySpec& body, const Vec& p1, const Vec& p2, double tol = 1e-10);

/// d(p1, p2) = |p1 - p2| / chord, with d = 0 when the points coincide to
/// within 1e-12 of the body scale.
AsymmetryResult asymmetry_d(const BodySpec& body, const Vec& p1, const Vec& p2);

/// d on the unit square [0,1]^2 for interior points, via exact clipping of
/// the line against the square.  On chords meeting the two coordinate-axis
/// edges this equals |x2-x1||y2-y1| / |x1 y2 - x2 y1|; a vanishing
/// denominator (line through the origin corner) throws
/// formula_degenerate_error per the contract.
double square_chord_d(double x1, double y1, double x2, double y2);

/// The raw corner formula, exposed for equivalence testing on its domain.
double square_corner_formula(double x1, double y1, double x2, double y2);

enum class ProductFamily { F, W, M };

/// One row of a sharpness sweep.
struct SweepRecord {
  ProductFamily family = ProductFamily::M;
  int n = 0;
  double point1 = 0.0;  // first point's first-factor coordinate
  double point2 = 0.0;  // second point's second-factor coordinate
  double d = 0.0;
  double gap = 0.0;  // n * (1 - d)
};

/// d for the product construction at total dimension n >= 6: the two factor
/// invariant points are computed exactly (closed forms, exact sums, or the
/// numeric revolution solver where the closed form's regime fails), and d is
/// evaluated on the axis-plane unit square.
SweepRecord family_d(ProductFamily family, int n);

/// Factor coordinates behind family_d: points (x1, y1) and (x2, y2) on the
/// axis-plane square, plus the factor parameters m1, m2.
struct FamilyPoints {
  double x1, y1, x2, y2;
  int m1, m2;
};
FamilyPoints family_points(ProductFamily family, int n);

/// Materialized product body for small-n cross-checks (dim n <= 8) plus the
/// two invariant points embedded in the full space.
struct MaterializedFamily {
  BodySpec body;
  Vec p1;
  Vec p2;
};
MaterializedFamily materialize_family(ProductFamily family, int n);

/// d <= 1 - 2/(n+1) + 1e-9.
bool bound_check(double d, int n);

std::string family_name(ProductFamily f);

}  // namespace cvxasym

#endif
