#ifndef CVXASYM_SWEEP_HPP
#define CVXASYM_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvxasym/asymmetry.hpp"
#include "cvxasym/bodies.hpp"
#include "cvxasym/types.hpp"

namespace cvxasym {

/// Least-squares fit of gap(n) = C + D/n; returns C.
/// Needs >= 4 records; all-equal n is a rank-deficient design.
double fit_constant(const std::vector<SweepRecord>& records);

struct FitDetail {
  double C = 0.0;
  double D = 0.0;
  double max_residual = 0.0;
};
FitDetail fit_constant_detail(const std::vector<SweepRecord>& records);

struct ConstantsResult {
  std::vector<SweepRecord> records;
  FitDetail fit;
  double target = 0.0;  // closed-form constant the sweep is compared against
  std::string csv;      // full file contents including the footer
};

/// The `constants` sweep: one record per n in [n_min, n_max] stepping by
/// `step`, with the fitted constant and the closed-form target in the footer.
ConstantsResult run_constants(ProductFamily family, int n_min, int n_max, int step);

struct BoundsTrial {
  int trial = 0;
  int retries = 0;
  double d = 0.0;
  bool pass = false;
};

struct BoundsResult {
  std::vector<BoundsTrial> trials;
  int failures = 0;
  std::string csv;
};

/// The `bounds` experiment: Gaussian clouds, exact hull centroid, MVEE
/// center, exact chord through the halfspace body, bound check per trial.
BoundsResult run_bounds(int dim, int trials, std::uint64_t seed, double epsilon = 1e-7);

/// Round-trippable CSV double formatting (%.17g).
std::string format_double(double v);

/// Headerless CSV point reader; parse failures name the line number.
Mat read_points_csv(const std::string& path);

std::vector<SweepRecord> read_constants_csv(const std::string& path);

/// Body grammar for the CLI:  `square`, `ball[*scale]:n`, `cube[*scale]:n`,
/// `cross[*scale]:n`, `simplex[*scale]:n`, `F1:n` .. `M2:n`,
/// `susp(<base>,<top>[,height])`.
BodySpec parse_body_spec(const std::string& spec);

/// Exact axial centroid for suspensions whose cap pair admits one
/// (cube with ball or cross in either order, or identically shaped caps).
std::optional<double> exact_suspension_centroid(const BodySpec& body);

enum class WriteOutcome { Written, Matched, Mismatch };

/// Never overwrites without force: existing files are compared byte-for-byte.
WriteOutcome write_or_compare(const std::string& path, const std::string& content,
                              bool force);

}  // namespace cvxasym

#endif
