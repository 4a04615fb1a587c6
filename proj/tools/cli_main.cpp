// Command-line front end: load a body and points, run one operation, emit a
// JSON or CSV document. Exit 0 on success, 1 on input or usage errors, 2 when
// a mathematical claim is falsified (a certification failure).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvxmetric/bounds.hpp"
#include "cvxmetric/errors.hpp"
#include "cvxmetric/extremal.hpp"
#include "cvxmetric/gauge.hpp"
#include "cvxmetric/json_io.hpp"
#include "cvxmetric/metrics.hpp"
#include "cvxmetric/oracles.hpp"
#include "cvxmetric/sampling.hpp"
#include "cvxmetric/selftest.hpp"

namespace {

using namespace cvxmetric;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFalsified = 2;

/* Non-finite never reaches the formatter on success paths; negative zero is
 * normalized so degenerate bounds print as 0. */
std::string fmt(double v) {
  if (v == 0.0) v = 0.0;
  return format_real(v);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CVXMETRIC_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return static_cast<std::uint64_t>(v);
    throw Error(std::string("CVXMETRIC_SEED is not an integer: ") + env);
  }
  return 1;
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + out_path);
  out << doc;
}

struct CommonArgs {
  std::string body_path;
  std::string x_arg, y_arg;
  std::string points_path;
  std::string out_path;
  std::string format = "json";
  double m = 0.0, M = 1.0;
  double tol = kCertifyTol;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

ConvexBody need_body(const CommonArgs& a) {
  if (a.body_path.empty()) throw Error("--body is required");
  return load_body_file(a.body_path);
}

Vector need_point(const std::string& arg, const char* name) {
  if (arg.empty()) throw Error(std::string(name) + " is required");
  return parse_point_arg(arg);
}

std::uint64_t pick_seed(const CommonArgs& a) {
  return a.seed_given ? a.seed : default_seed();
}

/* Vertex set covering the body, for range-calibrated function generation:
 * the body's own vertices, else the bounding-box corners. */
VPolytope covering_vertices(const ConvexBody& body) {
  if (const VPolytope* vp = body.as_vpolytope()) return *vp;
  const BoundingBox box = bounding_box(body);
  if (!box.bounded) throw Error("function generation needs a bounded body");
  const std::size_t n = body.dim();
  std::vector<Vector> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector c(n);
    for (std::size_t j = 0; j < n; ++j)
      c[j] = (mask >> j) & 1 ? box.hi[j] : box.lo[j];
    corners.push_back(std::move(c));
  }
  return VPolytope{std::move(corners)};
}

BoundedConvexFn select_fn(const std::string& kind, const ConvexBody& body, double m,
                          double M, std::uint64_t seed, std::size_t pieces) {
  if (kind == "linear" || kind == "quadratic") {
    const BoundingBox box = bounding_box(body);
    if (!box.bounded) throw Error("--fn " + kind + " needs a bounded body");
    const double lo = box.lo[0], span = box.hi[0] - box.lo[0];
    const bool quad = kind == "quadratic";
    return BoundedConvexFn{[lo, span, m, M, quad](const Vector& z) {
                             double s = span > 0.0 ? (z[0] - lo) / span : 0.0;
                             if (quad) s *= s;
                             return m + (M - m) * s;
                           },
                           m, M};
  }
  if (kind == "sin")
    return BoundedConvexFn{[m, M](const Vector& z) {
                             return m + (M - m) * (0.5 + 0.5 * std::sin(6.0 * z[0]));
                           },
                           m, M};
  if (kind == "random") {
    PiecewiseAffineConvexFn fn = random_convex_fn(covering_vertices(body), m, M, pieces, seed);
    return BoundedConvexFn{[fn](const Vector& z) { return fn(z); }, m, M};
  }
  throw Error("unknown --fn \"" + kind + "\" (want linear, quadratic, sin, or random)");
}

std::string interval_json(const BoundsInterval& iv) {
  return "{\"lower\": " + fmt(iv.lower) + ", \"upper\": " + fmt(iv.upper) + '}';
}

std::string report_json(const BoundReport& r) {
  std::string s = "{\"x\": [";
  for (std::size_t i = 0; i < r.pair.first.size(); ++i)
    s += (i ? ", " : "") + fmt(r.pair.first[i]);
  s += "], \"y\": [";
  for (std::size_t i = 0; i < r.pair.second.size(); ++i)
    s += (i ? ", " : "") + fmt(r.pair.second[i]);
  s += "], \"observed\": " + fmt(r.observed) +
       ", \"lower\": " + fmt(r.interval.lower) +
       ", \"upper\": " + fmt(r.interval.upper) +
       ", \"slack_lower\": " + fmt(r.slack_lower) +
       ", \"slack_upper\": " + fmt(r.slack_upper) +
       ", \"pass\": " + (r.pass ? "true" : "false") + '}';
  return s;
}

int run_scalar_metric(const std::string& verb, const CommonArgs& a) {
  ConvexBody body = need_body(a);
  const Vector x = need_point(a.x_arg, "--x");
  const Vector y = need_point(a.y_arg, "--y");
  std::string doc;
  if (verb == "tau") {
    doc = "{\"tau\": " + ext_real_to_json(tau(body, x, y)) + "}\n";
  } else {
    double v = verb == "funk"       ? funk(body, x, y)
               : verb == "thompson" ? thompson(body, x, y)
                                    : hilbert(body, x, y);
    doc = "{\"" + verb + "\": " + fmt(v) + "}\n";
  }
  emit(doc, a.out_path);
  return kExitOk;
}

int run_matrix(const CommonArgs& a, const std::string& metric) {
  ConvexBody body = need_body(a);
  if (a.points_path.empty()) throw Error("--points is required");
  std::vector<Vector> pts = load_points_csv(a.points_path);
  MetricKind kind = metric == "funk"       ? MetricKind::Funk
                    : metric == "thompson" ? MetricKind::Thompson
                    : metric == "hilbert"  ? MetricKind::Hilbert
                                           : throw Error("unknown --metric \"" + metric +
                                                         "\" (want funk, thompson, or hilbert)");
  Matrix d = distance_matrix(body, pts, kind);
  std::string doc;
  if (a.format == "csv") {
    for (std::size_t i = 0; i < d.rows; ++i) {
      for (std::size_t j = 0; j < d.cols; ++j) doc += (j ? "," : "") + fmt(d.at(i, j));
      doc += '\n';
    }
  } else if (a.format == "json") {
    doc = "[";
    for (std::size_t i = 0; i < d.rows; ++i) {
      doc += i ? ", [" : "[";
      for (std::size_t j = 0; j < d.cols; ++j) doc += (j ? ", " : "") + fmt(d.at(i, j));
      doc += ']';
    }
    doc += "]\n";
  } else {
    throw Error("unknown --format \"" + a.format + "\" (want json or csv)");
  }
  emit(doc, a.out_path);
  return kExitOk;
}

int run_bounds(const CommonArgs& a) {
  ConvexBody body = need_body(a);
  const Vector x = need_point(a.x_arg, "--x");
  const Vector y = need_point(a.y_arg, "--y");
  MetricFormBounds mf = metric_form_bounds(body, x, y, a.m, a.M);
  std::string doc = "{\"lower\": " + fmt(mf.funk_form.lower) +
                    ", \"upper\": " + fmt(mf.funk_form.upper) +
                    ", \"thompson_form\": " + interval_json(mf.thompson_form) +
                    ", \"hilbert_form\": " + interval_json(mf.hilbert_form) +
                    ", \"m\": " + fmt(a.m) + ", \"M\": " + fmt(a.M) + "}\n";
  emit(doc, a.out_path);
  return kExitOk;
}

int run_certify(const CommonArgs& a, const std::string& fn_kind, std::size_t pairs,
                std::size_t pieces) {
  ConvexBody body = need_body(a);
  BoundedConvexFn f = select_fn(fn_kind, body, a.m, a.M, pick_seed(a), pieces);

  std::vector<PointPair> pair_list;
  if (!a.points_path.empty()) {
    std::vector<Vector> pts = load_points_csv(a.points_path);
    if (pts.size() < 2 || pts.size() % 2 != 0)
      throw Error("--points for certify needs an even number of rows (consecutive pairs)");
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
      pair_list.emplace_back(pts[i], pts[i + 1]);
  } else {
    std::vector<Vector> pts = sample_interior(body, pick_seed(a) ^ 0xCE27, 2 * pairs);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
      pair_list.emplace_back(pts[i], pts[i + 1]);
  }

  std::vector<BoundReport> reports = certify(body, f, pair_list, a.tol);
  std::string doc;
  bool all_pass = true;
  for (const BoundReport& r : reports) {
    doc += report_json(r) + '\n';
    all_pass = all_pass && r.pass;
  }
  emit(doc, a.out_path);
  return all_pass ? kExitOk : kExitFalsified;
}

int run_extremal(const CommonArgs& a, const std::string& orientation, int grid) {
  ConvexBody body = need_body(a);
  const Vector x = need_point(a.x_arg, "--x");
  const Vector y = need_point(a.y_arg, "--y");
  Orientation o;
  if (orientation == "upper")
    o = Orientation::Upper;
  else if (orientation == "lower")
    o = Orientation::Lower;
  else
    throw Error("unknown --orientation \"" + orientation + "\" (want upper or lower)");
  ExtremalFn fn = build_extremal(body, x, y, a.m, a.M, o);

  if (grid > 0) {
    if (body.dim() > 2) throw Error("gridding limited to dim <= 2");
    const BoundingBox box = bounding_box(body);
    if (!box.bounded) throw Error("gridding needs a bounded body");
    const std::size_t n = body.dim();
    const std::size_t N = static_cast<std::size_t>(grid);
    std::string doc = n == 1 ? "z1,f\n" : "z1,z2,f\n";
    const std::size_t total = n == 1 ? N : N * N;
    for (std::size_t cell = 0; cell < total; ++cell) {
      Vector z(n);
      z[0] = box.lo[0] + (static_cast<double>(cell % N) + 0.5) / static_cast<double>(N) *
                             (box.hi[0] - box.lo[0]);
      if (n == 2)
        z[1] = box.lo[1] + (static_cast<double>(cell / N) + 0.5) / static_cast<double>(N) *
                               (box.hi[1] - box.lo[1]);
      if (!is_strictly_interior(body, z, fn.margin())) continue;
      doc += fmt(z[0]);
      if (n == 2) doc += ',' + fmt(z[1]);
      doc += ',' + fmt(eval_extremal(fn, z)) + '\n';
    }
    emit(doc, a.out_path);
    return kExitOk;
  }

  std::string doc = "{\"tau\": " + ext_real_to_json(fn.anchor_tau()) +
                    ", \"constant\": " + (fn.constant() ? "true" : "false") +
                    ", \"f_x\": " + fmt(eval_extremal(fn, x)) +
                    ", \"f_y\": " + fmt(eval_extremal(fn, y)) + "}\n";
  emit(doc, a.out_path);
  return kExitOk;
}

int run_gauge(const CommonArgs& a) {
  ConvexBody body = need_body(a);
  const Vector x0 = need_point(a.x_arg, "--x");
  const Vector p = need_point(a.y_arg, "--y");
  GaugeFn g = make_gauge_fn(body, x0);
  emit(fmt(gauge_value(g, p)) + "\n", a.out_path);
  return kExitOk;
}

int run_subdiff(const CommonArgs& a) {
  ConvexBody body = need_body(a);
  const Vector x0 = need_point(a.x_arg, "--x");
  const Vector zeta = need_point(a.y_arg, "--y");
  ExtReal support = ExtReal::finite(0.0);
  const bool member = max_subdiff_contains(body, x0, zeta, a.m, a.M, kSubdiffTol, &support);
  emit("{\"member\": " + std::string(member ? "true" : "false") +
           ", \"support_value\": " + ext_real_to_json(support) + "}\n",
       a.out_path);
  return kExitOk;
}

int run_selftest_verb(const CommonArgs& a) {
  std::ostringstream buf;
  const bool ok = run_selftest(buf, pick_seed(a));
  emit(buf.str(), a.out_path);
  return ok ? kExitOk : kExitFalsified;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_pair, bool with_range) {
  cmd->add_option("--body", a.body_path, "Body description file (JSON)");
  if (with_pair) {
    cmd->add_option("--x", a.x_arg, "Point, comma-separated reals");
    cmd->add_option("--y", a.y_arg, "Point, comma-separated reals");
  }
  cmd->add_option("--points", a.points_path, "CSV of points, one per row");
  if (with_range) {
    cmd->add_option("--m", a.m, "Lower range bound");
    cmd->add_option("--M", a.M, "Upper range bound");
  }
  cmd->add_option("--format", a.format, "Output format: json or csv");
  cmd->add_option("--seed", a.seed, "Random seed")->each([&a](const std::string&) {
    a.seed_given = true;
  });
  cmd->add_option("--tol", a.tol, "Certification tolerance");
  cmd->add_option("--out", a.out_path, "Write the document here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-body metrics, variation bounds, and gauges"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string metric = "funk";
  std::string fn_kind = "random";
  std::string orientation = "upper";
  std::size_t pairs = 100, pieces = 4;
  int grid = 0;

  for (const char* verb : {"tau", "funk", "thompson", "hilbert"})
    add_common(app.add_subcommand(verb), a, true, false);

  CLI::App* matrix_cmd = app.add_subcommand("matrix");
  add_common(matrix_cmd, a, false, false);
  matrix_cmd->add_option("--metric", metric, "funk, thompson, or hilbert");

  add_common(app.add_subcommand("bounds"), a, true, true);

  CLI::App* certify_cmd = app.add_subcommand("certify");
  add_common(certify_cmd, a, false, true);
  certify_cmd->add_option("--fn", fn_kind, "linear, quadratic, sin, or random");
  certify_cmd->add_option("--pairs", pairs, "Seeded pair count when --points is absent");
  certify_cmd->add_option("--pieces", pieces, "Piece count for --fn random");

  CLI::App* extremal_cmd = app.add_subcommand("extremal");
  add_common(extremal_cmd, a, true, true);
  extremal_cmd->add_option("--orientation", orientation, "upper or lower");
  extremal_cmd->add_option("--grid", grid, "Tabulate over an N-per-axis grid (CSV)");

  add_common(app.add_subcommand("gauge"), a, true, false);
  add_common(app.add_subcommand("subdiff"), a, true, true);
  add_common(app.add_subcommand("selftest"), a, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "tau" || verb == "funk" || verb == "thompson" || verb == "hilbert")
      return run_scalar_metric(verb, a);
    if (verb == "matrix") return run_matrix(a, metric);
    if (verb == "bounds") return run_bounds(a);
    if (verb == "certify") return run_certify(a, fn_kind, pairs, pieces);
    if (verb == "extremal") return run_extremal(a, orientation, grid);
    if (verb == "gauge") return run_gauge(a);
    if (verb == "subdiff") return run_subdiff(a);
    if (verb == "selftest") return run_selftest_verb(a);
    std::cerr << "error: unknown verb " << verb << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
