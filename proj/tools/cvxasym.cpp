// cvxasym: affine-invariant centers and symmetry measures of convex bodies.
//
// Subcommands:
//   constants  sharpness sweep n -> n*(1-d) for the F/W/M product families
//   bounds     random-polytope check of d(g,l) <= 1 - 2/(n+1)
//   mvee       minimum-volume enclosing ellipsoid of a CSV point cloud
//   centroid   exact or Monte Carlo suspension centroid
//   chord      chord length and asymmetry d for two interior points
//
// Every subcommand accepts --config FILE with flat `key = value` lines
// (# comments); explicit flags override file values, unknown keys are
// rejected.  Exit codes: 0 success, 1 invariant/bound violation, 2 usage.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "cvxasym/asymmetry.hpp"
#include "cvxasym/centroids.hpp"
#include "cvxasym/ellipsoids.hpp"
#include "cvxasym/errors.hpp"
#include "cvxasym/sweep.hpp"

namespace {

using namespace cvxasym;

struct ConfigBinding {
  std::string key;
  CLI::Option* flag;  // config applies only when the flag was not given
  std::function<void(const std::string&)> apply;
};

class ConfigLayer {
 public:
  void bind_string(const std::string& key, CLI::Option* flag, std::string* target) {
    bindings_.push_back({key, flag, [target](const std::string& v) { *target = v; }});
  }
  void bind_int(const std::string& key, CLI::Option* flag, int* target) {
    bindings_.push_back(
        {key, flag, [target, key](const std::string& v) { *target = parse_long(v, key); }});
  }
  void bind_long(const std::string& key, CLI::Option* flag, long* target) {
    bindings_.push_back(
        {key, flag, [target, key](const std::string& v) { *target = parse_long(v, key); }});
  }
  void bind_seed(const std::string& key, CLI::Option* flag, std::uint64_t* target,
                 bool* seen) {
    bindings_.push_back({key, flag, [target, seen, key](const std::string& v) {
                           *target = static_cast<std::uint64_t>(parse_long(v, key));
                           *seen = true;
                         }});
  }
  void bind_double(const std::string& key, CLI::Option* flag, double* target) {
    bindings_.push_back({key, flag, [target, key](const std::string& v) {
                           size_t pos = 0;
                           *target = std::stod(v, &pos);
                           if (pos != v.size())
                             throw std::domain_error("config: bad number for key '" +
                                                     key + "'");
                         }});
  }
  void bind_bool(const std::string& key, CLI::Option* flag, bool* target) {
    bindings_.push_back({key, flag, [target, key](const std::string& v) {
                           if (v == "true" || v == "1" || v == "yes")
                             *target = true;
                           else if (v == "false" || v == "0" || v == "no")
                             *target = false;
                           else
                             throw std::domain_error("config: bad boolean for key '" +
                                                     key + "'");
                         }});
  }

  // Flat `key = value` lines, # comments.  Flags keep precedence; unknown
  // keys are usage errors.
  void load(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string stripped = trim(line.substr(0, line.find('#')));
      if (stripped.empty()) continue;
      const size_t eq = stripped.find('=');
      if (eq == std::string::npos)
        throw std::domain_error("config " + path + ":" + std::to_string(lineno) +
                                ": expected `key = value`");
      const std::string key = trim(stripped.substr(0, eq));
      const std::string value = trim(stripped.substr(eq + 1));
      const ConfigBinding* found = nullptr;
      for (const ConfigBinding& b : bindings_)
        if (b.key == key) found = &b;
      if (!found)
        throw std::domain_error("config " + path + ":" + std::to_string(lineno) +
                                ": unknown key '" + key + "'");
      if (found->flag != nullptr && found->flag->count() > 0) continue;
      found->apply(value);
    }
  }

 private:
  static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
  }
  static long parse_long(const std::string& v, const std::string& key) {
    size_t pos = 0;
    const long out = std::stol(v, &pos);
    if (pos != v.size())
      throw std::domain_error("config: bad integer for key '" + key + "'");
    return out;
  }
  std::vector<ConfigBinding> bindings_;
};

ProductFamily parse_family(const std::string& f) {
  if (f == "F") return ProductFamily::F;
  if (f == "W") return ProductFamily::W;
  if (f == "M") return ProductFamily::M;
  throw std::domain_error("unknown family '" + f + "' (expected F, W, or M)");
}

Vec parse_point(const std::string& s) {
  std::vector<double> vals;
  std::string cur;
  auto flush = [&] {
    size_t pos = 0;
    vals.push_back(std::stod(cur, &pos));
    if (pos != cur.size()) throw std::domain_error("bad coordinate '" + cur + "'");
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  if (!cur.empty()) flush();
  Vec v(static_cast<int>(vals.size()));
  for (int i = 0; i < v.size(); ++i) v(i) = vals[static_cast<size_t>(i)];
  return v;
}

int report_write(const std::string& path, const std::string& content, bool force) {
  switch (write_or_compare(path, content, force)) {
    case WriteOutcome::Written:
      std::printf("wrote %s\n", path.c_str());
      return 0;
    case WriteOutcome::Matched:
      std::printf("output matches existing %s (rerun verified)\n", path.c_str());
      return 0;
    case WriteOutcome::Mismatch:
      std::fprintf(stderr, "error: %s exists and differs; pass --force to overwrite\n",
                   path.c_str());
      return 1;
  }
  return 1;
}

int cmd_constants(const std::string& family, int n_min, int n_max, int step,
                  const std::string& out, bool force) {
  if (out.empty()) throw std::domain_error("constants: --out is required");
  const ConstantsResult r = run_constants(parse_family(family), n_min, n_max, step);
  std::printf("family %s: fitted_constant = %.10g  target_constant = %.10g  "
              "max_fit_residual = %.3g\n",
              family.c_str(), r.fit.C, r.target, r.fit.max_residual);
  return report_write(out, r.csv, force);
}

int cmd_bounds(int dim, int trials, std::uint64_t seed, bool have_seed, double epsilon,
               const std::string& out, bool force) {
  if (!have_seed) throw std::domain_error("bounds: --seed is required");
  if (out.empty()) throw std::domain_error("bounds: --out is required");
  const BoundsResult r = run_bounds(dim, trials, seed, epsilon);
  std::printf("bounds dim=%d trials=%d failures=%d\n", dim, trials, r.failures);
  const int wr = report_write(out, r.csv, force);
  if (wr != 0) return wr;
  return r.failures == 0 ? 0 : 1;
}

int cmd_mvee(const std::string& points_path, double epsilon) {
  if (points_path.empty()) throw std::domain_error("mvee: --points is required");
  const Mat pts = read_points_csv(points_path);
  MveeStats stats;
  const Ellipsoid e = mvee(pts, epsilon, &stats);
  std::printf("center =");
  for (int i = 0; i < e.center.size(); ++i) std::printf(" %.12g", e.center(i));
  std::printf("\n");
  Eigen::SelfAdjointEigenSolver<Mat> es(e.shape);
  Vec axes = es.eigenvalues().cwiseInverse().cwiseSqrt();
  std::sort(axes.data(), axes.data() + axes.size(), std::greater<double>());
  std::printf("semi_axes =");
  for (int i = 0; i < axes.size(); ++i) std::printf(" %.12g", axes(i));
  std::printf("\nlog_volume = %.12g\ndual_gap = %.3g  iterations = %ld\n",
              e.log_volume(), stats.dual_gap, stats.iterations);
  return 0;
}

int cmd_centroid(const std::string& spec, const std::string& method, long samples,
                 std::uint64_t seed, bool have_seed) {
  if (spec.empty()) throw std::domain_error("centroid: --body is required");
  const BodySpec body = parse_body_spec(spec);
  if (method == "exact") {
    const auto v = exact_suspension_centroid(body);
    if (!v)
      throw std::domain_error(
          "no exact mixed-volume formula for '" + spec +
          "' (supported caps: cube with ball or cross, or identical caps); "
          "use --method montecarlo");
    std::printf("axial_centroid = %.15g   (exact: mixed-volume rows, Gamma sums)\n", *v);
    return 0;
  }
  if (method != "montecarlo")
    throw std::domain_error("centroid: method must be exact or montecarlo");
  if (body.dim() > 8)
    throw std::domain_error(
        "montecarlo centroid refused for dimension " + std::to_string(body.dim()) +
        " > 8 (rejection sampling is hopeless there); use --method exact");
  if (!have_seed) throw std::domain_error("centroid --method montecarlo: --seed is required");
  const MonteCarloCentroid mc = monte_carlo_centroid(body, samples, seed);
  std::printf("centroid_estimate =");
  for (int i = 0; i < mc.mean.size(); ++i) std::printf(" %.10g", mc.mean(i));
  std::printf("\nstandard_error   =");
  for (int i = 0; i < mc.standard_error.size(); ++i)
    std::printf(" %.3g", mc.standard_error(i));
  std::printf("\n(montecarlo: %ld samples, seed %llu)\n", mc.samples,
              static_cast<unsigned long long>(seed));
  return 0;
}

int cmd_chord(const std::string& spec, const std::string& p1s, const std::string& p2s) {
  if (spec.empty()) throw std::domain_error("chord: --body is required");
  const BodySpec body = parse_body_spec(spec);
  Vec p1 = parse_point(p1s), p2 = parse_point(p2s);
  const bool is_square = (spec == "square");
  Vec q1 = p1, q2 = p2;
  if (is_square) {
    // user coordinates live in [0,1]^2, the parsed body is centered
    q1 = p1.array() - 0.5;
    q2 = p2.array() - 0.5;
  }
  const AsymmetryResult a = asymmetry_d(body, q1, q2);
  if (a.chord)
    std::printf("chord = %.12g\nd = %.12g\n", *a.chord, a.d);
  else
    std::printf("points coincide: d = 0\n");
  if (is_square && a.chord) {
    try {
      const double clip = square_chord_d(p1(0), p1(1), p2(0), p2(1));
      const double corner = square_corner_formula(p1(0), p1(1), p2(0), p2(1));
      std::printf("square_clip_d = %.12g\ncorner_formula = %.12g\n", clip, corner);
    } catch (const formula_degenerate_error&) {
      std::printf("corner_formula = degenerate (line through corner); "
                  "bisection value above stands\n");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine-invariant centers and symmetry measures of convex bodies"};
  app.require_subcommand(1);

  std::string family = "M", out, points_path, body_spec, method = "exact";
  std::string p1s, p2s, config_path;
  int n_min = 100, n_max = 1000, step = 50, dim = 3, trials = 100;
  long samples = 1000000;
  std::uint64_t seed = 0;
  double epsilon = 1e-7;
  bool force = false, seed_seen = false;

  ConfigLayer cfg_const, cfg_bounds, cfg_mvee, cfg_cent, cfg_chord;

  CLI::App* sc_const = app.add_subcommand("constants", "family sharpness sweep");
  {
    ConfigLayer& c = cfg_const;
    c.bind_string("family", sc_const->add_option("--family", family, "F, W, or M"),
                  &family);
    c.bind_int("n-min", sc_const->add_option("--n-min", n_min), &n_min);
    c.bind_int("n-max", sc_const->add_option("--n-max", n_max), &n_max);
    c.bind_int("step", sc_const->add_option("--step", step), &step);
    c.bind_string("out", sc_const->add_option("--out", out, "output CSV"), &out);
    c.bind_bool("force", sc_const->add_flag("--force", force, "overwrite output"),
                &force);
    sc_const->add_option("--config", config_path, "key = value file");
  }

  CLI::App* sc_bounds = app.add_subcommand("bounds", "random-polytope bound checks");
  {
    ConfigLayer& c = cfg_bounds;
    c.bind_int("dim", sc_bounds->add_option("--dim", dim, "2 or 3"), &dim);
    c.bind_int("trials", sc_bounds->add_option("--trials", trials), &trials);
    CLI::Option* so = sc_bounds->add_option("--seed", seed);
    c.bind_seed("seed", so, &seed, &seed_seen);
    so->each([&seed_seen](const std::string&) { seed_seen = true; });
    c.bind_double("epsilon", sc_bounds->add_option("--epsilon", epsilon), &epsilon);
    c.bind_string("out", sc_bounds->add_option("--out", out, "output CSV"), &out);
    c.bind_bool("force", sc_bounds->add_flag("--force", force), &force);
    sc_bounds->add_option("--config", config_path, "key = value file");
  }

  CLI::App* sc_mvee = app.add_subcommand("mvee", "minimum-volume enclosing ellipsoid");
  {
    ConfigLayer& c = cfg_mvee;
    c.bind_string("points",
                  sc_mvee->add_option("--points", points_path, "headerless CSV"),
                  &points_path);
    c.bind_double("epsilon", sc_mvee->add_option("--epsilon", epsilon), &epsilon);
    sc_mvee->add_option("--config", config_path, "key = value file");
  }

  CLI::App* sc_cent = app.add_subcommand("centroid", "suspension centroid");
  {
    ConfigLayer& c = cfg_cent;
    c.bind_string("body",
                  sc_cent->add_option("--body", body_spec, "e.g. F1:8 or susp(cube:3,ball:3)"),
                  &body_spec);
    c.bind_string("method", sc_cent->add_option("--method", method, "exact|montecarlo"),
                  &method);
    c.bind_long("samples", sc_cent->add_option("--samples", samples), &samples);
    CLI::Option* so = sc_cent->add_option("--seed", seed);
    c.bind_seed("seed", so, &seed, &seed_seen);
    so->each([&seed_seen](const std::string&) { seed_seen = true; });
    sc_cent->add_option("--config", config_path, "key = value file");
  }

  CLI::App* sc_chord = app.add_subcommand("chord", "chord and asymmetry d");
  {
    ConfigLayer& c = cfg_chord;
    c.bind_string("body", sc_chord->add_option("--body", body_spec), &body_spec);
    c.bind_string("p1", sc_chord->add_option("--p1", p1s, "comma-separated"), &p1s);
    c.bind_string("p2", sc_chord->add_option("--p2", p2s, "comma-separated"), &p2s);
    sc_chord->add_option("--config", config_path, "key = value file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) {
      if (sc_const->parsed()) cfg_const.load(config_path);
      if (sc_bounds->parsed()) cfg_bounds.load(config_path);
      if (sc_mvee->parsed()) cfg_mvee.load(config_path);
      if (sc_cent->parsed()) cfg_cent.load(config_path);
      if (sc_chord->parsed()) cfg_chord.load(config_path);
    }
    if (sc_const->parsed()) return cmd_constants(family, n_min, n_max, step, out, force);
    if (sc_bounds->parsed())
      return cmd_bounds(dim, trials, seed, seed_seen, epsilon, out, force);
    if (sc_mvee->parsed()) return cmd_mvee(points_path, epsilon);
    if (sc_cent->parsed())
      return cmd_centroid(body_spec, method, samples, seed, seed_seen);
    if (sc_chord->parsed()) return cmd_chord(body_spec, p1s, p2s);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
