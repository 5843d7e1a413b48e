#ifndef CVXASYM_ELLIPSOIDS_HPP
#define CVXASYM_ELLIPSOIDS_HPP

#include <cstdint>

#include "cvxasym/bodies.hpp"
#include "cvxasym/types.hpp"

namespace cvxasym {

/// {x : (x - center)' shape (x - center) <= 1} with shape symmetric positive
/// definite.
struct Ellipsoid {
  Vec center;
  Mat shape;

  double mahalanobis2(const Vec& x) const;
  /// log vol = log vol(B^d_2) - 0.5 log det(shape)
  double log_volume() const;
  /// support of the centered ellipsoid: sqrt(theta' shape^{-1} theta)
  double centered_support(const Vec& theta) const;
};

/// Contact vectors u_i on the sphere with weights c_i forming a resolution of
/// the identity: sum c_i u_i = 0 and sum c_i u_i u_i' = I.
struct JohnCertificate {
  Mat contacts;  // rows, unit norm
  Vec weights;   // positive
};

enum class RevolutionKind { John, Loewner };

/// Axially symmetric ellipsoid patch for suspension bodies: center c on the
/// axis, equatorial semi-axis a, axial semi-axis b.
struct RevolutionSolution {
  double c = 0.0;
  double a = 0.0;
  double b = 0.0;
  RevolutionKind which = RevolutionKind::John;
};

struct MveeStats {
  double dual_gap = 0.0;  // max_i q_i' X^{-1} q_i / (d+1) - 1 at termination
  long iterations = 0;
};

/// Minimum-volume enclosing ellipsoid by Khachiyan coordinate ascent with
/// away steps.  Stops when the lifted dual gap satisfies
/// max_i q_i' X^{-1} q_i <= (1+epsilon)(d+1); the returned ellipsoid is scaled
/// to contain every input point exactly.
Ellipsoid mvee(const Mat& points, double epsilon, MveeStats* stats = nullptr);

/// Loewner center of conv((K0,0),(K1,1)) from the cap Loewner radii
/// R0 >= R1 > 0: the "-" root of the generalized quadratic, required to lie
/// in (0, 1/2); equal radii give the cylinder solution c = 1/2.
RevolutionSolution revolution_loewner_solve(double R0, double R1, int n);
double revolution_loewner_center(double R0, double R1, int n);

/// John center from the cap John radii: c = r0 / ((n+2)(r0-r1)) in the b = c
/// regime, reflected when r0 < r1; throws validity_error when the computed
/// center leaves (0, 1/2] and the caller must fall back to a numeric solve.
RevolutionSolution revolution_john_solve(double r0, double r1, int n);
double revolution_john_center(double r0, double r1, int n);

/// Brute-force grid + golden-section optimizer of the reduced
/// one-parameter volume profiles, refined to 1e-10.  Throws ambiguity_error
/// when the sampled profile has more than one local optimum.
double revolution_numeric_oracle(RevolutionKind which, double R0, double R1, int n,
                                 int grid);

/// Full two-parameter John solve for revolution suspensions: maximizes
/// b * a^n over center c and axial semi-axis b <= min(c, 1-c), with the
/// equatorial semi-axis bound to the lateral cone.  Valid in regimes where
/// the b = c reduction fails (it then typically returns the slab solution
/// c = 1/2).
double revolution_john_numeric(double r0, double r1, int n);

/// Decomposition-of-identity check:
/// |sum c_i u_i| <= tol and max-entry |sum c_i u_i u_i' - I| <= tol.
bool john_certificate_check(const JohnCertificate& cert, double tol);

/// (p(D), p(K)) concatenation used by all product constructions.
Vec product_invariant_point(const Vec& pA, const Vec& pB);

struct InclusionReport {
  double loewner_inner = 0.0;       // max violation of (1/n)(L-l) in K-l
  double loewner_outer = 0.0;       // max violation of K-l in L-l
  double centroid_reflection = 0.0; // max violation of K-g in n(g-K)
  int trials = 0;
};

/// Support-function spot checks of the classical inclusions on random
/// directions.  All three numbers should be <= 0 up to round-off.
InclusionReport inclusion_checks(const BodySpec& body, const Vec& g, const Ellipsoid& L,
                                 int trials, std::uint64_t seed);

}  // namespace cvxasym

#endif
