#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cvxasym/centroids.hpp"
#include "cvxasym/errors.hpp"
#include "cvxasym/scalarmath.hpp"

using namespace cvxasym;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// Area of (unit disk) + (square of half-side t) by integrating slab widths:
// for |y| <= t the x-extent is 2(t+1); above, 2(t + sqrt(1-(|y|-t)^2)).
// Independent of the mixed-volume code path.
double disk_plus_square_area(double t, int slices) {
  auto width = [t](double y) {
    const double ay = std::abs(y);
    if (ay <= t) return 2.0 * (t + 1.0);
    const double dy = ay - t;
    return 2.0 * (t + std::sqrt(std::max(0.0, 1.0 - dy * dy)));
  };
  // composite Simpson on [0, t+1], doubled
  const double a = 0.0, b = t + 1.0;
  const double h = (b - a) / slices;
  double s = width(a) + width(b);
  for (int i = 1; i < slices; ++i) s += width(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return 2.0 * s * h / 3.0;
}

}  // namespace

TEST_CASE("mixed volumes with the cube") {
  for (int n : {2, 3, 5}) {
    CHECK(mixed_volume_with_cube(MixedBase::Ball, 1.0, 1.0, n, 0).log() ==
          doctest::Approx(unit_ball_volume(n, PNorm::Two).log()).epsilon(1e-14));
    CHECK(mixed_volume_with_cube(MixedBase::Cross, 0.7, 1.3, n, n).value() ==
          doctest::Approx(std::pow(2.0 * 1.3, n)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(mixed_volume_with_cube(MixedBase::Ball, 1, 1, 3, 4), std::domain_error);

  // V_{1,1}(B^2_2, B^2_inf) = 4, frozen from the quadrature oracle:
  // fit area(disk + t*square) = a + b t + c t^2 through three t values and
  // match the cross coefficient b = 2 V_{1,1} ... with side-2t squares the
  // Minkowski polynomial reads pi + (2 V11) t + 4 t^2 where V11 carries the
  // factor (2 mu)^k already; b/2 recovers V11.
  const double t1 = 0.5, t2 = 1.0, t3 = 2.0;
  const double a1 = disk_plus_square_area(t1, 100000);
  const double a2 = disk_plus_square_area(t2, 100000);
  const double a3 = disk_plus_square_area(t3, 100000);
  // solve the Vandermonde system for the linear coefficient
  Eigen::Matrix3d V;
  V << 1, t1, t1 * t1, 1, t2, t2 * t2, 1, t3, t3 * t3;
  Eigen::Vector3d rhs(a1, a2, a3);
  const Eigen::Vector3d coef = V.fullPivLu().solve(rhs);
  CHECK(coef(0) == doctest::Approx(kPi).epsilon(1e-5));
  CHECK(coef(2) == doctest::Approx(4.0).epsilon(1e-5));
  const double v11_oracle = coef(1) / 2.0;
  CHECK(v11_oracle == doctest::Approx(4.0).epsilon(1e-5));
  CHECK(mixed_volume_with_cube(MixedBase::Ball, 1.0, 1.0, 2, 1).value() ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("suspension centroid height: symmetric and concentrated rows") {
  const int n = 6;
  std::vector<MixedVolumeRow> equal;
  for (int k = 0; k <= n; ++k) equal.push_back({n, k, LogReal::from_value(2.5)});
  CHECK(suspension_centroid_height(equal, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(suspension_centroid_height(equal, 3.0) == doctest::Approx(1.5).epsilon(1e-14));

  std::vector<MixedVolumeRow> last_only;
  for (int k = 0; k <= n; ++k)
    last_only.push_back({n, k, k == n ? LogReal::from_value(1.0) : LogReal()});
  CHECK(suspension_centroid_height(last_only, 1.0) ==
        doctest::Approx(static_cast<double>(n + 1) / (n + 2)).epsilon(1e-14));

  std::vector<MixedVolumeRow> zeros;
  for (int k = 0; k <= n; ++k) zeros.push_back({n, k, LogReal()});
  CHECK_THROWS_AS(suspension_centroid_height(zeros, 1.0), degeneracy_error);
}

TEST_CASE("row route equals the family formula") {
  // F1: V_{n-k,k}(B_inf, B_2) is the flip of V_{n-k,k}(B_2, B_inf)
  for (int n : {2, 3, 7, 20}) {
    std::vector<MixedVolumeRow> rows = mixed_volume_rows(MixedBase::Ball, 1.0, 1.0, n);
    std::vector<MixedVolumeRow> flipped(rows.size());
    for (int k = 0; k <= n; ++k) {
      flipped[static_cast<size_t>(k)] = rows[static_cast<size_t>(n - k)];
      flipped[static_cast<size_t>(k)].k = k;
    }
    CHECK(suspension_centroid_height(flipped, 1.0) ==
          doctest::Approx(centroid_height_family(CentroidFamily::F1, n)).epsilon(1e-13));
  }
}

TEST_CASE("ratio bounds for arbitrary positive rows") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> U(-30.0, 30.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    std::vector<MixedVolumeRow> rows;
    for (int k = 0; k <= n; ++k) rows.push_back({n, k, LogReal::from_log(U(rng))});
    const double c = 0.5 + 2.0 * (static_cast<double>(rng() % 1000) / 1000.0);
    const double g = suspension_centroid_height(rows, c);
    CHECK(g > c / (n + 2));
    CHECK(g < c * (n + 1.0) / (n + 2));
  }
}

TEST_CASE("family centroid limits") {
  // W2 drifts to 1 - 1/e like 1/n
  const double lim = 1.0 - 1.0 / kE;
  double prev_dev = 1.0;
  for (int n : {50, 100, 200}) {
    const double dev = std::abs(centroid_height_family(CentroidFamily::W2, n) - lim);
    CHECK(dev < prev_dev * 0.6);  // at least roughly halving
    prev_dev = dev;
  }
  // F2 approaches the same limit
  CHECK(centroid_height_family(CentroidFamily::F2, 400) ==
        doctest::Approx(lim).epsilon(2e-3));
  // F1 and W1 shrink like const/n
  CHECK(300.0 * centroid_height_family(CentroidFamily::F1, 300) ==
        doctest::Approx(limit_constants().inner_F1).epsilon(0.01));
  CHECK(500.0 * centroid_height_family(CentroidFamily::W1, 500) ==
        doctest::Approx(inner_W1()).epsilon(0.05));
  CHECK_THROWS_AS(centroid_height_family(CentroidFamily::F1, 1), std::domain_error);
}

TEST_CASE("F1 ratio converges to the closed form") {
  // sum k T_k / sum T_k at n = 300 vs sqrt(pi) f'(sqrt(pi))/f(sqrt(pi))
  const int n = 300;
  const double g = centroid_height_family(CentroidFamily::F1, n);
  const double ratio = g * (n + 2.0) - 1.0;
  const double closed =
      kPi / 2.0 + std::exp(-kPi / 4.0) / (cvxasym::erf(std::sqrt(kPi) / 2.0) + 1.0);
  CHECK(std::abs(ratio - closed) < 1e-8);
}

TEST_CASE("W2 sum identity term by term") {
  // sum_{k<=n} k x^k/k! = x sum_{k<=n-1} x^k/k! at x = n/e
  for (int n : {10, 50, 200}) {
    const double lx = std::log(static_cast<double>(n)) - 1.0;
    std::vector<double> lhs, rhs;
    for (int k = 1; k <= n; ++k)
      lhs.push_back(std::log(static_cast<double>(k)) + k * lx - log_gamma(k + 1.0));
    for (int k = 0; k <= n - 1; ++k) rhs.push_back(lx + k * lx - log_gamma(k + 1.0));
    CHECK(log_sum_exp(lhs) == doctest::Approx(log_sum_exp(rhs)).epsilon(1e-12));
  }
}

TEST_CASE("limit constants") {
  const LimitConstants lc = limit_constants();
  CHECK(lc.inner_F1 == doctest::Approx(2.8255234).epsilon(1e-6));
  CHECK(lc.C_star == doctest::Approx(12.9398).epsilon(1e-4));
  CHECK(lc.C_star_star == doctest::Approx(19.6542).epsilon(1e-4));
  CHECK(inner_W1() == doctest::Approx(4.9476676).epsilon(1e-6));
  CHECK(std::abs(lc.C_star - 13.0) < 0.5);
  CHECK(std::abs(lc.C_star_star - 20.0) < 0.5);
}

TEST_CASE("Monte Carlo centroid cross-checks") {
  // symmetric cube: zero mean within 3 sigma
  const MonteCarloCentroid cube = monte_carlo_centroid(BodySpec::cube(3), 100000, 5);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(cube.mean(i)) <= 3.0 * cube.standard_error(i));

  // triangle: centroid equals the vertex average (zero)
  const MonteCarloCentroid tri = monte_carlo_centroid(BodySpec::simplex(2), 100000, 6);
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(tri.mean(i)) <= 3.5 * tri.standard_error(i));

  // suspension of square and disk: last coordinate matches the exact rows
  const BodySpec s = BodySpec::suspension(BodySpec::cube(2), BodySpec::ball(2));
  const MonteCarloCentroid mc = monte_carlo_centroid(s, 400000, 7);
  std::vector<MixedVolumeRow> rows = mixed_volume_rows(MixedBase::Ball, 1.0, 1.0, 2);
  std::vector<MixedVolumeRow> flipped(rows.size());
  for (int k = 0; k <= 2; ++k) {
    flipped[static_cast<size_t>(k)] = rows[static_cast<size_t>(2 - k)];
    flipped[static_cast<size_t>(k)].k = k;
  }
  const double exact = suspension_centroid_height(flipped, 1.0);
  CHECK(std::abs(mc.mean(2) - exact) <= 3.0 * mc.standard_error(2));

  CHECK_THROWS_AS(monte_carlo_centroid(BodySpec::cube(3), 100, 1), std::domain_error);
}

TEST_CASE("family bodies have the advertised caps") {
  CHECK(family_body(CentroidFamily::F1, 3).dim() == 4);
  CHECK(family_body(CentroidFamily::W2, 2).dim() == 3);
}
