#include "cvxasym/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cvxasym/centroids.hpp"
#include "cvxasym/ellipsoids.hpp"
#include "cvxasym/errors.hpp"
#include "cvxasym/hull.hpp"

namespace cvxasym {

namespace {

constexpr double kE = 2.71828182845904523536;
constexpr double kTwoPi = 6.28318530717958647692;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, hand-rolled so files are reproducible independent of the
// standard library's distribution internals.
double normal01(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double family_target(ProductFamily f) {
  const LimitConstants lc = limit_constants();
  switch (f) {
    case ProductFamily::M:
      return 8.0;
    case ProductFamily::F:
      return lc.C_star;
    case ProductFamily::W:
      return lc.C_star_star;
  }
  return 0.0;
}

ProductFamily family_from_name(const std::string& s) {
  if (s == "F") return ProductFamily::F;
  if (s == "W") return ProductFamily::W;
  if (s == "M") return ProductFamily::M;
  throw std::domain_error("unknown family name: " + s);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& tok, const std::string& where) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw std::domain_error("bad number '" + tok + "' in " + where);
  }
  while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos != tok.size())
    throw std::domain_error("trailing junk in number '" + tok + "' in " + where);
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double fit_constant(const std::vector<SweepRecord>& records) {
  return fit_constant_detail(records).C;
}

FitDetail fit_constant_detail(const std::vector<SweepRecord>& records) {
  if (records.size() < 4)
    throw std::domain_error("fit_constant: need at least 4 records");
  double s1 = 0.0, sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  bool distinct = false;
  for (const SweepRecord& r : records) {
    if (r.n != records.front().n) distinct = true;
    const double x = 1.0 / r.n;
    s1 += 1.0;
    sx += x;
    sxx += x * x;
    sy += r.gap;
    sxy += x * r.gap;
  }
  if (!distinct)
    throw std::domain_error("fit_constant: all records share one n (rank-deficient)");
  const double det = s1 * sxx - sx * sx;
  FitDetail fd;
  fd.C = (sy * sxx - sxy * sx) / det;
  fd.D = (s1 * sxy - sx * sy) / det;
  for (const SweepRecord& r : records)
    fd.max_residual =
        std::max(fd.max_residual, std::abs(r.gap - (fd.C + fd.D / r.n)));
  return fd;
}

ConstantsResult run_constants(ProductFamily family, int n_min, int n_max, int step) {
  if (n_min < 6 || n_max < n_min || n_max > 2000)
    throw std::domain_error("run_constants: need 6 <= n_min <= n_max <= 2000");
  if (step < 1) throw std::domain_error("run_constants: step must be >= 1");
  ConstantsResult out;
  for (int n = n_min; n <= n_max; n += step) out.records.push_back(family_d(family, n));
  out.fit = fit_constant_detail(out.records);
  out.target = family_target(family);

  std::ostringstream os;
  os << "family,n,point1,point2,d,gap\n";
  for (const SweepRecord& r : out.records) {
    os << family_name(r.family) << ',' << r.n << ',' << format_double(r.point1) << ','
       << format_double(r.point2) << ',' << format_double(r.d) << ','
       << format_double(r.gap) << '\n';
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "# fitted_constant = %.10g\n", out.fit.C);
  os << buf;
  std::snprintf(buf, sizeof(buf), "# target_constant = %.10g\n", out.target);
  os << buf;
  std::snprintf(buf, sizeof(buf), "# max_fit_residual = %.10g\n", out.fit.max_residual);
  os << buf;
  out.csv = os.str();
  return out;
}

BoundsResult run_bounds(int dim, int trials, std::uint64_t seed, double epsilon) {
  if (dim != 2 && dim != 3) throw std::domain_error("run_bounds: dim must be 2 or 3");
  if (trials < 1) throw std::domain_error("run_bounds: trials must be >= 1");
  BoundsResult out;
  const int npoints = 4 * dim;
  std::ostringstream os;
  os << "trial,d,bound,pass\n";
  for (int t = 0; t < trials; ++t) {
    BoundsTrial bt;
    bt.trial = t;
    bool built = false;
    for (int retry = 0; retry < 10 && !built; ++retry) {
      bt.retries = retry;
      std::mt19937_64 rng(seed + 1000003ULL * static_cast<std::uint64_t>(t) +
                          static_cast<std::uint64_t>(retry));
      Mat cloud(npoints, dim);
      for (int i = 0; i < npoints; ++i)
        for (int j = 0; j < dim; ++j) cloud(i, j) = normal01(rng);
      try {
        Mat normals;
        Vec offsets, g;
        std::vector<int> verts;
        if (dim == 3) {
          Hull3 h = quickhull3(cloud);
          normals = h.normals;
          offsets = h.offsets;
          g = h.centroid;
          verts = h.vertices;
        } else {
          Hull2 h = hull2d(cloud);
          normals = h.normals;
          offsets = h.offsets;
          g = h.centroid;
          verts = h.vertices;
        }
        Mat vp(static_cast<int>(verts.size()), dim);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
          vp.row(i) = cloud.row(verts[static_cast<size_t>(i)]);
        const Ellipsoid L = mvee(vp, epsilon);
        const BodySpec body = hull_halfspace_body(normals, offsets, g);
        const AsymmetryResult a =
            asymmetry_d(body, Vec::Zero(dim), (L.center - g).eval());
        bt.d = a.d;
        built = true;
      } catch (const degeneracy_error&) {
        continue;
      }
    }
    if (!built)
      throw degeneracy_error("run_bounds: degenerate cloud after 10 retries");
    bt.pass = bound_check(bt.d, dim);
    if (!bt.pass) ++out.failures;
    os << bt.trial << ',' << format_double(bt.d) << ','
       << format_double(1.0 - 2.0 / (dim + 1.0)) << ',' << (bt.pass ? 1 : 0) << '\n';
    out.trials.push_back(bt);
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf), "# trials = %d\n", trials);
  os << buf;
  std::snprintf(buf, sizeof(buf), "# failures = %d\n", out.failures);
  os << buf;
  out.csv = os.str();
  return out;
}

Mat read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open point file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  int dim = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> toks = split(line, ',');
    std::vector<double> row;
    for (const std::string& t : toks)
      row.push_back(parse_double(t, path + ":" + std::to_string(lineno)));
    if (dim < 0) dim = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != dim)
      throw std::domain_error(path + ":" + std::to_string(lineno) +
                              ": inconsistent column count");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::domain_error("point file is empty: " + path);
  Mat m(static_cast<int>(rows.size()), dim);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

std::vector<SweepRecord> read_constants_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open sweep file: " + path);
  std::vector<SweepRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("family,", 0) == 0) continue;  // header
    const std::vector<std::string> toks = split(line, ',');
    if (toks.size() != 6)
      throw std::domain_error(path + ":" + std::to_string(lineno) +
                              ": expected 6 columns");
    SweepRecord r;
    r.family = family_from_name(toks[0]);
    r.n = static_cast<int>(parse_double(toks[1], path));
    r.point1 = parse_double(toks[2], path);
    r.point2 = parse_double(toks[3], path);
    r.d = parse_double(toks[4], path);
    r.gap = parse_double(toks[5], path);
    out.push_back(r);
  }
  return out;
}

namespace {

// token forms: name[*scale]:dim
BodySpec parse_simple_body(const std::string& tok) {
  const size_t colon = tok.find(':');
  if (colon == std::string::npos)
    throw std::domain_error("body spec '" + tok + "': missing ':dim'");
  std::string head = tok.substr(0, colon);
  const std::string dims = tok.substr(colon + 1);
  double scale = 1.0;
  const size_t star = head.find('*');
  if (star != std::string::npos) {
    scale = parse_double(head.substr(star + 1), "body spec '" + tok + "'");
    head = head.substr(0, star);
  }
  int dim;
  try {
    dim = std::stoi(dims);
  } catch (const std::exception&) {
    throw std::domain_error("body spec '" + tok + "': bad dimension '" + dims + "'");
  }
  if (head == "ball") return BodySpec::ball(dim, scale);
  if (head == "cube") return BodySpec::cube(dim, scale);
  if (head == "cross") return BodySpec::cross_polytope(dim, scale);
  if (head == "simplex") return BodySpec::simplex(dim, scale);
  if (head == "F1") return family_body(CentroidFamily::F1, dim);
  if (head == "F2") return family_body(CentroidFamily::F2, dim);
  if (head == "W1") return family_body(CentroidFamily::W1, dim);
  if (head == "W2") return family_body(CentroidFamily::W2, dim);
  if (head == "M1")
    return BodySpec::suspension(BodySpec::ball(dim), BodySpec::simplex(dim));
  if (head == "M2")
    return BodySpec::suspension(BodySpec::simplex(dim), BodySpec::ball(dim, 1.0 / dim));
  throw std::domain_error("body spec: unknown family '" + head + "'");
}

}  // namespace

BodySpec parse_body_spec(const std::string& spec) {
  if (spec == "square") {
    // [0,1]^2 shifted to [-1/2,1/2]^2 so the origin is interior (halfspace
    // offsets must be positive); the CLI translates square points to match.
    Mat nn(4, 2);
    nn << 1, 0, -1, 0, 0, 1, 0, -1;
    Vec bb(4);
    bb << 0.5, 0.5, 0.5, 0.5;
    return BodySpec::halfspaces(nn, bb);
  }
  if (spec.rfind("susp(", 0) == 0) {
    if (spec.back() != ')')
      throw std::domain_error("body spec '" + spec + "': missing ')'");
    const std::string inner = spec.substr(5, spec.size() - 6);
    const std::vector<std::string> parts = split(inner, ',');
    if (parts.size() != 2 && parts.size() != 3)
      throw std::domain_error("body spec '" + spec + "': susp needs two caps");
    double h = 1.0;
    if (parts.size() == 3) h = parse_double(parts[2], "susp height");
    return BodySpec::suspension(parse_simple_body(parts[0]), parse_simple_body(parts[1]),
                                h);
  }
  return parse_simple_body(spec);
}

std::optional<double> exact_suspension_centroid(const BodySpec& body) {
  const auto* s = std::get_if<SuspensionBody>(&body.node());
  if (!s) return std::nullopt;
  const auto* c0 = std::get_if<ScaledStandard>(&s->base->node());
  const auto* c1 = std::get_if<ScaledStandard>(&s->top->node());
  if (!c0 || !c1) return std::nullopt;
  const int n = c0->dim;
  // identical caps up to scale: V_{n-k,k} = l0^(n-k) l1^k vol(K)
  if (c0->p == c1->p) {
    std::vector<MixedVolumeRow> rows;
    for (int k = 0; k <= n; ++k) {
      const double lg = (n - k) * std::log(c0->scale) + k * std::log(c1->scale);
      rows.push_back({n, k, LogReal::from_log(lg)});
    }
    return suspension_centroid_height(rows, s->height);
  }
  auto rows_for = [&](MixedBase base, double lam, double mu,
                      bool flip) -> std::vector<MixedVolumeRow> {
    std::vector<MixedVolumeRow> rows = mixed_volume_rows(base, lam, mu, n);
    if (flip) {  // V_{n-k,k}(K,L) = V_{k,n-k}(L,K)
      std::vector<MixedVolumeRow> r2(rows.size());
      for (int k = 0; k <= n; ++k) {
        r2[static_cast<size_t>(k)] = rows[static_cast<size_t>(n - k)];
        r2[static_cast<size_t>(k)].k = k;
      }
      return r2;
    }
    return rows;
  };
  if (c1->p == PNorm::Inf && c0->p == PNorm::One)
    return suspension_centroid_height(
        rows_for(MixedBase::Cross, c0->scale, c1->scale, false), s->height);
  if (c1->p == PNorm::Inf && c0->p == PNorm::Two)
    return suspension_centroid_height(
        rows_for(MixedBase::Ball, c0->scale, c1->scale, false), s->height);
  if (c0->p == PNorm::Inf && c1->p == PNorm::One)
    return suspension_centroid_height(
        rows_for(MixedBase::Cross, c1->scale, c0->scale, true), s->height);
  if (c0->p == PNorm::Inf && c1->p == PNorm::Two)
    return suspension_centroid_height(
        rows_for(MixedBase::Ball, c1->scale, c0->scale, true), s->height);
  return std::nullopt;
}

WriteOutcome write_or_compare(const std::string& path, const std::string& content,
                              bool force) {
  std::ifstream in(path, std::ios::binary);
  if (in && !force) {
    std::ostringstream old;
    old << in.rdbuf();
    return old.str() == content ? WriteOutcome::Matched : WriteOutcome::Mismatch;
  }
  in.close();
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) throw std::runtime_error("cannot write output file: " + path);
  outf << content;
  return WriteOutcome::Written;
}

}  // namespace cvxasym
