#include "cvxasym/centroids.hpp"

#include <cmath>
#include <stdexcept>

#include "cvxasym/errors.hpp"
#include "cvxasym/scalarmath.hpp"

namespace cvxasym {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// ratio sum(k * e^t_k) / sum(e^t_k) for log-domain terms t_0..t_n
double weighted_index_ratio(const std::vector<double>& logs) {
  std::vector<double> weighted;
  weighted.reserve(logs.size());
  for (size_t k = 1; k < logs.size(); ++k)
    weighted.push_back(logs[k] + std::log(static_cast<double>(k)));
  if (weighted.empty()) return 0.0;
  return std::exp(log_sum_exp(weighted) - log_sum_exp(logs));
}

}  // namespace

LogReal mixed_volume_with_cube(MixedBase base, double lambda, double mu, int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("mixed_volume_with_cube: k out of range");
  if (!(lambda > 0.0) || !(mu > 0.0))
    throw std::domain_error("mixed_volume_with_cube: scales must be positive");
  const LogReal proj =
      unit_ball_volume(n - k, base == MixedBase::Cross ? PNorm::One : PNorm::Two);
  const double lg = k * std::log(2.0 * mu) + (n - k) * std::log(lambda) + proj.log();
  return LogReal::from_log(lg);
}

std::vector<MixedVolumeRow> mixed_volume_rows(MixedBase base, double lambda, double mu,
                                              int n) {
  std::vector<MixedVolumeRow> rows;
  rows.reserve(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    rows.push_back({n, k, mixed_volume_with_cube(base, lambda, mu, n, k)});
  return rows;
}

double suspension_centroid_height(const std::vector<MixedVolumeRow>& rows, double c) {
  if (rows.empty()) throw std::domain_error("suspension_centroid_height: no rows");
  const int n = rows.front().n;
  if (static_cast<int>(rows.size()) != n + 1)
    throw std::domain_error("suspension_centroid_height: rows must cover k = 0..n");
  std::vector<double> logs, weighted;
  logs.reserve(rows.size());
  weighted.reserve(rows.size());
  bool any_positive = false;
  for (int k = 0; k <= n; ++k) {
    const MixedVolumeRow& r = rows[static_cast<size_t>(k)];
    if (r.k != k) throw std::domain_error("suspension_centroid_height: gap in rows");
    if (!r.value.is_zero()) any_positive = true;
    logs.push_back(r.value.log());
    weighted.push_back(r.value.log() + std::log(static_cast<double>(k + 1)));
  }
  if (!any_positive)
    throw degeneracy_error("suspension_centroid_height: all rows are zero");
  return c / (n + 2) * std::exp(log_sum_exp(weighted) - log_sum_exp(logs));
}

double centroid_height_family(CentroidFamily family, int n) {
  if (n < 2) throw std::domain_error("centroid_height_family: n must be >= 2");
  const double nd = n;
  std::vector<double> logs(static_cast<size_t>(n + 1));
  switch (family) {
    case CentroidFamily::F1: {
      const double lx = std::log(std::sqrt(kPi) / 2.0);
      for (int k = 0; k <= n; ++k)
        logs[static_cast<size_t>(k)] = k * lx - log_gamma(0.5 * k + 1.0);
      return (1.0 + weighted_index_ratio(logs)) / (nd + 2.0);
    }
    case CentroidFamily::F2: {
      const double lx = 0.5 * std::log(nd / (2.0 * kE));
      for (int k = 0; k <= n; ++k)
        logs[static_cast<size_t>(k)] = k * lx - log_gamma(0.5 * k + 1.0);
      return (nd + 1.0) / (nd + 2.0) - weighted_index_ratio(logs) / (nd + 2.0);
    }
    case CentroidFamily::W1: {
      const double lq = 0.5 * std::log(kPi * nd / 4.0);
      for (int k = 0; k <= n; ++k)
        logs[static_cast<size_t>(k)] =
            (n - k) * lq - log_gamma(1.0 + 0.5 * (n - k));
      return (1.0 + weighted_index_ratio(logs)) / (nd + 2.0);
    }
    case CentroidFamily::W2: {
      const double lx = std::log(nd) - 1.0;  // ln(n/e)
      for (int k = 0; k <= n; ++k)
        logs[static_cast<size_t>(k)] = k * lx - log_gamma(k + 1.0);
      return (nd + 1.0) / (nd + 2.0) - weighted_index_ratio(logs) / (nd + 2.0);
    }
  }
  throw std::domain_error("centroid_height_family: unknown family");
}

LimitConstants limit_constants() {
  const double inner =
      1.0 + kPi / 2.0 + std::exp(-kPi / 4.0) / (erf(std::sqrt(kPi) / 2.0) + 1.0);
  const double ee = 2.0 * kE / (kE - 1.0);
  LimitConstants c;
  c.inner_F1 = inner;
  c.C_star = 4.0 + ee * inner;
  c.C_star_star = 4.0 + ee * inner_W1();
  return c;
}

double inner_W1() { return 1.0 / (1.0 - std::sqrt(2.0 / kPi)); }

MonteCarloCentroid monte_carlo_centroid(const BodySpec& body, long samples,
                                        std::uint64_t seed) {
  if (body.dim() > 8)
    throw std::domain_error("monte_carlo_centroid: dimension must be <= 8");
  if (samples < 10000)
    throw std::domain_error("monte_carlo_centroid: need at least 1e4 samples");
  const std::vector<Vec> pts = sample_interior(body, samples, seed);
  const int d = body.dim();
  Vec mean = Vec::Zero(d), m2 = Vec::Zero(d);
  long count = 0;
  for (const Vec& p : pts) {
    ++count;
    const Vec delta = p - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta.cwiseProduct(p - mean);
  }
  MonteCarloCentroid out;
  out.mean = mean;
  out.standard_error =
      (m2 / static_cast<double>(count - 1)).cwiseSqrt() / std::sqrt(static_cast<double>(count));
  out.samples = count;
  return out;
}

BodySpec family_body(CentroidFamily family, int n) {
  switch (family) {
    case CentroidFamily::F1:
      return BodySpec::suspension(BodySpec::cube(n), BodySpec::ball(n));
    case CentroidFamily::F2:
      return BodySpec::suspension(BodySpec::ball(n, std::sqrt(n / (2.0 * kE * kPi))),
                                  BodySpec::cube(n, 0.5));
    case CentroidFamily::W1:
      return BodySpec::suspension(BodySpec::ball(n),
                                  BodySpec::cube(n, 1.0 / std::sqrt(n)));
    case CentroidFamily::W2:
      return BodySpec::suspension(BodySpec::cross_polytope(n, n / kE),
                                  BodySpec::cube(n));
  }
  throw std::domain_error("family_body: unknown family");
}

}  // namespace cvxasym
