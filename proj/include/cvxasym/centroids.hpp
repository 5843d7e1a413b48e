#ifndef CVXASYM_CENTROIDS_HPP
#define CVXASYM_CENTROIDS_HPP

#include <cstdint>
#include <vector>

#include "cvxasym/bodies.hpp"
#include "cvxasym/logreal.hpp"
#include "cvxasym/types.hpp"

namespace cvxasym {

/// One coefficient V_{n-k,k}(K,L) of the Minkowski volume polynomial.
struct MixedVolumeRow {
  int n = 0;
  int k = 0;
  LogReal value;
};

enum class MixedBase { Cross, Ball };

/// V_{n-k,k}(lambda * base, mu * cube) via the projection identities:
/// (2 mu)^k lambda^(n-k) vol_{n-k} of the base's unit ball.  Log domain.
LogReal mixed_volume_with_cube(MixedBase base, double lambda, double mu, int n, int k);

/// Full row sequence k = 0..n for suspension_centroid_height.
std::vector<MixedVolumeRow> mixed_volume_rows(MixedBase base, double lambda, double mu, int n);

/// Axial centroid coordinate of conv((K,0),(L,c)):
///   c/(n+2) * sum (k+1) V_{n-k,k} / sum V_{n-k,k},
/// evaluated with two log-sum-exp reductions.  Lies strictly in (0, c).
double suspension_centroid_height(const std::vector<MixedVolumeRow>& rows, double c);

enum class CentroidFamily { F1, F2, W1, W2 };

/// Exact finite-n axial centroid of the four suspension families, each via
/// its own Gamma-weighted sum (height 1).
double centroid_height_family(CentroidFamily family, int n);

struct LimitConstants {
  double inner_F1;      // 1 + pi/2 + e^{-pi/4} / (erf(sqrt(pi)/2) + 1)
  double C_star;        // 4 + (2e/(e-1)) * inner_F1
  double C_star_star;   // 4 + 2e / ((e-1)(1 - sqrt(2/pi)))
};

LimitConstants limit_constants();

/// Limit of n * g_W1(n); also the inner factor of C_star_star.
double inner_W1();

struct MonteCarloCentroid {
  Vec mean;
  Vec standard_error;
  long samples = 0;
};

/// Empirical centroid of sample_interior output with per-coordinate standard
/// errors.  Requires dim <= 8 and samples >= 1e4.
MonteCarloCentroid monte_carlo_centroid(const BodySpec& body, long samples,
                                        std::uint64_t seed);

/// Bodies behind the family evaluators, usable for sampling cross-checks.
BodySpec family_body(CentroidFamily family, int n);

}  // namespace cvxasym

#endif
