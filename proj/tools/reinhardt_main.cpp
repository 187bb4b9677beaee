#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reinhardt/batch.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/metrics.hpp"
#include "reinhardt/parse.hpp"
#include "reinhardt/verify.hpp"

namespace {

using namespace reinhardt;

// Full double precision everywhere; eval and grid must agree bit for bit at
// shared points, which string formatting would otherwise silently break.
std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_token(const ComplexScalar& c) {
  if (c.imag() == 0.0) return fmt17(c.real());
  if (c.imag() < 0.0) return fmt17(c.real()) + "-" + fmt17(-c.imag()) + "i";
  return fmt17(c.real()) + "+" + fmt17(c.imag()) + "i";
}

std::string point_token(const Point& z) {
  std::string out;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j) out += ",";
    out += complex_token(z[j]);
  }
  return out;
}

nlohmann::json point_json(const Point& z) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ComplexScalar& c : z) arr.push_back({c.real(), c.imag()});
  return arr;
}

struct CommonOptions {
  std::string alpha_spec;
  std::string type = "auto";
  std::int64_t max_denominator = 1'000'000;
  double tolerance = 1e-12;
};

void add_common(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("-a,--alpha", c.alpha_spec,
                  "Exponent entries, comma separated; each INT, INT/INT, or a "
                  "decimal literal")
      ->required();
  cmd->add_option("--type", c.type,
                  "Type handling: auto-detect, or force rational/irrational")
      ->check(CLI::IsMember({"auto", "rational", "irrational"}));
  cmd->add_option("--max-denominator", c.max_denominator,
                  "Largest denominator tried by rational detection");
  cmd->add_option("--tolerance", c.tolerance,
                  "Relative tolerance of rational detection");
}

DomainDescriptor build_domain(const CommonOptions& c) {
  TypeOverride ov = TypeOverride::Auto;
  if (c.type == "rational") ov = TypeOverride::Rational;
  if (c.type == "irrational") ov = TypeOverride::Irrational;
  ClassifyOptions opts;
  opts.max_denominator = c.max_denominator;
  opts.tolerance = c.tolerance;
  return domain_from_spec(c.alpha_spec, ov, opts);
}

// Membership failures must name the offending point, not just the condition.
void require_labeled(const DomainDescriptor& d, const Point& z,
                     const std::string& label) {
  if (d.dimension() != z.size()) {
    fail(ErrorKind::DimensionMismatch,
         label + " (" + point_token(z) + ") has " + std::to_string(z.size()) +
             " coordinates, the exponent vector has " +
             std::to_string(d.dimension()));
  }
  if (!member_ambient(d.alpha, z)) {
    fail(ErrorKind::NotInDomain,
         label + " (" + point_token(z) +
             ") has a zero coordinate at a negative exponent, outside "
             "C^n(alpha)");
  }
  if (!member_domain(d.alpha, z)) {
    fail(ErrorKind::NotInDomain,
         label + " (" + point_token(z) + ") has |z^alpha| >= 1");
  }
}

class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!*file_) {
        fail(ErrorKind::PreconditionViolation,
             "cannot open output file: " + path);
      }
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::optional<std::ofstream> file_;
};

int run_classify(const CommonOptions& c, const std::string& out_path) {
  const DomainDescriptor d = build_domain(c);
  nlohmann::json j;
  if (d.rational()) {
    j["kind"] = "rational";
    j["primitive"] = d.classification.primitive;
    const double s = d.classification.scale;
    if (s == std::floor(s) && std::abs(s) < 9.0e15) {
      j["scale"] = static_cast<long long>(std::llround(s));
    } else {
      j["scale"] = s;
    }
  } else {
    j["kind"] = "irrational";
  }
  OutStream out(out_path);
  out.get() << j.dump() << "\n";
  return 0;
}

struct EvalData {
  DomainDescriptor domain;
  Point base;
  std::vector<Point> points;
  std::vector<MetricRow> rows;
};

void write_eval_plain(std::ostream& os, const EvalData& d) {
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const MetricRow& r = d.rows[i];
    const InvariantSet& inv = r.sibony.invariants_used;
    os << "z=(" << point_token(d.points[i]) << ")  m=" << fmt17(*r.moebius.value)
       << "  s=" << fmt17(*r.sibony.value) << "  g="
       << (r.green.known() ? fmt17(*r.green.value) : std::string("unknown"))
       << "  branch=" << branch_name(r.sibony.branch)
       << "  sigma=" << inv.sigma
       << "  mu=" << (inv.mu ? fmt17(*inv.mu) : std::string("-"))
       << "  r=" << fmt17(inv.r) << "\n";
  }
}

void write_eval_csv(std::ostream& os, const EvalData& d) {
  const std::size_t n = d.domain.dimension();
  for (std::size_t j = 1; j <= n; ++j) os << "z" << j << ",";
  os << "m,s,g,branch,sigma,mu,r\n";
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const MetricRow& r = d.rows[i];
    const InvariantSet& inv = r.sibony.invariants_used;
    for (const ComplexScalar& c : d.points[i]) os << complex_token(c) << ",";
    os << fmt17(*r.moebius.value) << "," << fmt17(*r.sibony.value) << ","
       << (r.green.known() ? fmt17(*r.green.value) : std::string("unknown"))
       << "," << branch_name(r.sibony.branch) << "," << inv.sigma << ","
       << (inv.mu ? fmt17(*inv.mu) : std::string("")) << "," << fmt17(inv.r)
       << "\n";
  }
}

void write_eval_json(std::ostream& os, const EvalData& d) {
  nlohmann::json j;
  j["alpha"] = d.domain.alpha.entries;
  j["kind"] = d.domain.rational() ? "rational" : "irrational";
  j["base"] = point_json(d.base);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const MetricRow& r = d.rows[i];
    const InvariantSet& inv = r.sibony.invariants_used;
    nlohmann::json row;
    row["point"] = point_json(d.points[i]);
    row["m"] = *r.moebius.value;
    row["s"] = *r.sibony.value;
    if (r.green.known()) {
      row["g"] = *r.green.value;
    } else {
      row["g"] = nullptr;
    }
    row["branch"] = branch_name(r.sibony.branch);
    row["sigma"] = inv.sigma;
    if (inv.mu) {
      row["mu"] = *inv.mu;
    } else {
      row["mu"] = nullptr;
    }
    row["r"] = inv.r;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

int run_eval(const CommonOptions& c, const std::string& base_spec,
             const std::vector<std::string>& point_specs,
             const std::string& points_file, const std::string& format,
             const std::string& out_path) {
  EvalData d{build_domain(c), {}, {}, {}};
  d.base = parse_point(base_spec);
  require_labeled(d.domain, d.base, "base point");

  for (const std::string& spec : point_specs) {
    d.points.push_back(parse_point(spec));
  }
  if (!points_file.empty()) {
    std::ifstream in(points_file);
    if (!in) {
      fail(ErrorKind::PreconditionViolation,
           "cannot open points file: " + points_file);
    }
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      d.points.push_back(parse_point(line.substr(first, last - first + 1)));
    }
  }
  if (d.points.empty()) {
    fail(ErrorKind::ParseError,
         "no query points given; use --point or --points-file");
  }
  for (const Point& z : d.points) {
    require_labeled(d.domain, z, "query point");
  }

  d.rows.reserve(d.points.size());
  for (const Point& z : d.points) {
    d.rows.push_back(evaluate_all(d.domain, d.base, z));
  }

  OutStream out(out_path);
  if (format == "json") {
    write_eval_json(out.get(), d);
  } else if (format == "csv") {
    write_eval_csv(out.get(), d);
  } else {
    write_eval_plain(out.get(), d);
  }
  return 0;
}

struct AxisSpec {
  std::size_t index = 0;  // zero-based
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 0;
};

AxisSpec parse_axis(const std::string& text, std::size_t dim) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    fail(ErrorKind::ParseError,
         "axis spec '" + text + "' is not of the form INDEX:LO:HI:COUNT");
  }
  const auto number = [&](const std::string& tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) {
      fail(ErrorKind::ParseError, "bad axis number '" + tok + "'");
    }
    return v;
  };
  const double idx = number(parts[0]);
  AxisSpec axis;
  if (idx != std::floor(idx) || idx < 1 || idx > static_cast<double>(dim)) {
    fail(ErrorKind::ParseError,
         "axis index '" + parts[0] + "' must be an integer in [1, " +
             std::to_string(dim) + "]");
  }
  axis.index = static_cast<std::size_t>(idx) - 1;
  axis.lo = number(parts[1]);
  axis.hi = number(parts[2]);
  const double steps = number(parts[3]);
  if (steps != std::floor(steps) || steps < 1 || steps > 1e7) {
    fail(ErrorKind::ParseError,
         "axis count '" + parts[3] + "' must be a positive integer");
  }
  axis.steps = static_cast<std::size_t>(steps);
  return axis;
}

std::vector<double> axis_values(const AxisSpec& axis) {
  std::vector<double> v;
  v.reserve(axis.steps);
  if (axis.steps == 1) {
    v.push_back(axis.lo);
    return v;
  }
  for (std::size_t k = 0; k < axis.steps; ++k) {
    v.push_back(axis.lo + (axis.hi - axis.lo) * static_cast<double>(k) /
                              static_cast<double>(axis.steps - 1));
  }
  return v;
}

int run_grid(const CommonOptions& c, const std::string& base_spec,
             const std::vector<std::string>& point_specs,
             const std::string& axis1_spec, const std::string& axis2_spec,
             const std::string& out_path) {
  const DomainDescriptor domain = build_domain(c);
  const Point base = parse_point(base_spec);
  require_labeled(domain, base, "base point");
  const std::size_t n = domain.dimension();

  Point tmpl(n, ComplexScalar(0.0, 0.0));
  if (!point_specs.empty()) {
    tmpl = parse_point(point_specs.front());
    if (tmpl.size() != n) {
      fail(ErrorKind::DimensionMismatch,
           "template point (" + point_token(tmpl) +
               ") does not match the exponent dimension");
    }
  }

  const AxisSpec axis1 = parse_axis(axis1_spec, n);
  std::optional<AxisSpec> axis2;
  if (!axis2_spec.empty()) {
    axis2 = parse_axis(axis2_spec, n);
    if (axis2->index == axis1.index) {
      fail(ErrorKind::ParseError, "the two axes use the same coordinate");
    }
  }

  const std::vector<double> values1 = axis_values(axis1);
  const std::vector<double> values2 =
      axis2 ? axis_values(*axis2) : std::vector<double>{0.0};

  OutStream out(out_path);
  std::ostream& os = out.get();
  os << "coord1,coord2,m,s,g\n";
  Point z = tmpl;
  for (const double v1 : values1) {
    for (const double v2 : values2) {
      z = tmpl;
      z[axis1.index] = ComplexScalar(v1, 0.0);
      if (axis2) z[axis2->index] = ComplexScalar(v2, 0.0);
      if (!member_domain(domain.alpha, z)) continue;  // node omitted
      const MetricRow r = evaluate_all(domain, base, z);
      os << fmt17(v1) << "," << fmt17(v2) << "," << fmt17(*r.moebius.value)
         << "," << fmt17(*r.sibony.value) << ","
         << (r.green.known() ? fmt17(*r.green.value) : std::string("unknown"))
         << "\n";
    }
  }
  return 0;
}

int run_verify(const CommonOptions& c, const std::string& base_spec,
               const std::string& suite, std::uint64_t seed, std::size_t count,
               double check_tolerance, const std::string& out_path) {
  const DomainDescriptor domain = build_domain(c);
  const Point base = parse_point(base_spec);
  require_labeled(domain, base, "base point");

  SuiteOptions options;
  options.seed = seed;
  options.count = count;
  options.tolerance = check_tolerance;
  const std::vector<VerificationReport> reports =
      run_suite(domain, base, suite, options);

  OutStream out(out_path);
  out.get() << reports_to_json_string(reports, 2) << "\n";

  for (const VerificationReport& r : reports) {
    if (!r.pass) return 4;
  }
  return 0;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidExponent:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Moebius, Green, and Sibony functions on elementary Reinhardt domains"};
  app.require_subcommand(1);

  CommonOptions c_classify, c_eval, c_grid, c_verify;
  std::string out_classify, out_eval, out_grid, out_verify;

  CLI::App* classify = app.add_subcommand(
      "classify", "Detect rational/irrational type of the exponent vector");
  add_common(classify, c_classify);
  classify->add_option("--out", out_classify, "Output file (default stdout)");

  CLI::App* eval =
      app.add_subcommand("eval", "Evaluate m, s, g at query points");
  add_common(eval, c_eval);
  std::string eval_base, eval_points_file, eval_format = "plain";
  std::vector<std::string> eval_points;
  eval->add_option("--base", eval_base, "Base point a")->required();
  eval->add_option("--point", eval_points, "Query point (repeatable)");
  eval->add_option("--points-file", eval_points_file,
                   "File with one point per line");
  eval->add_option("--format", eval_format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  eval->add_option("--out", out_eval, "Output file (default stdout)");

  CLI::App* grid = app.add_subcommand(
      "grid", "Export a CSV slice of m, s, g over a coordinate grid");
  add_common(grid, c_grid);
  std::string grid_base, grid_axis1, grid_axis2;
  std::vector<std::string> grid_points;
  grid->add_option("--base", grid_base, "Base point a")->required();
  grid->add_option("--point", grid_points,
                   "Template point supplying the fixed coordinates");
  grid->add_option("--axis1", grid_axis1,
                   "First axis as INDEX:LO:HI:COUNT (1-based index)")
      ->required();
  grid->add_option("--axis2", grid_axis2,
                   "Second axis as INDEX:LO:HI:COUNT (omit for a 1D slice)");
  grid->add_option("--out", out_grid, "Output file (default stdout)");

  CLI::App* verify =
      app.add_subcommand("verify", "Run verification suites, report as JSON");
  add_common(verify, c_verify);
  std::string verify_base, verify_suite = "all";
  std::uint64_t verify_seed = 0;
  std::size_t verify_count = 1000;
  double check_tolerance = reinhardt::kDefaultCheckTolerance;
  verify->add_option("--base", verify_base, "Base point a")->required();
  verify->add_option("--suite", verify_suite, "Which checks to run")
      ->check(CLI::IsMember(
          {"chain", "invariance", "extremal", "covering", "disc", "all"}));
  verify->add_option("--seed", verify_seed, "Sampling seed");
  verify->add_option("--count", verify_count, "Samples per check");
  verify->add_option("--check-tolerance", check_tolerance,
                     "Violation tolerance of the checks");
  verify->add_option("--out", out_verify, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return run_classify(c_classify, out_classify);
    if (eval->parsed()) {
      return run_eval(c_eval, eval_base, eval_points, eval_points_file,
                      eval_format, out_eval);
    }
    if (grid->parsed()) {
      return run_grid(c_grid, grid_base, grid_points, grid_axis1, grid_axis2,
                      out_grid);
    }
    return run_verify(c_verify, verify_base, verify_suite, verify_seed,
                      verify_count, check_tolerance, out_verify);
  } catch (const reinhardt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
