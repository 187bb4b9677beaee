#include "reinhardt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "json.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/invariants.hpp"
#include "reinhardt/metrics.hpp"

namespace reinhardt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Exceptions raised inside a parallel region would terminate the process;
// capture per index and rethrow the first one after the loop.
struct CapturedError {
  bool has = false;
  ErrorKind kind = ErrorKind::PreconditionViolation;
  std::string message;
};

template <typename F>
void guarded_for(Exec mode, std::size_t n, F&& body) {
  std::vector<CapturedError> errors(n);
  for_each_index(mode, n, [&](std::size_t i) {
    try {
      body(i);
    } catch (const Error& e) {
      errors[i] = {true, e.kind(), e.what()};
    } catch (const std::exception& e) {
      errors[i] = {true, ErrorKind::PreconditionViolation, e.what()};
    }
  });
  for (CapturedError& err : errors) {
    if (err.has) fail(err.kind, err.message);
  }
}

void require_all_positive(const DomainDescriptor& domain, const char* who) {
  for (double e : domain.alpha.entries) {
    if (!(e > 0.0)) {
      fail(ErrorKind::PreconditionViolation,
           std::string(who) +
               " needs strictly positive exponents; canonicalize first");
    }
  }
}

double u_power(std::span<const double> alpha, double inverse_exponent,
               const Point& z) {
  const LogMagnitude lm = log_abs_monomial(alpha, z);
  if (lm.is_zero()) return 0.0;
  return std::exp(2.0 * lm.value / inverse_exponent);
}

double value_deviation(const MetricValue& x, const MetricValue& y) {
  if (x.known() != y.known()) return kInf;
  if (!x.known()) return 0.0;
  return std::abs(*x.value - *y.value);
}

double row_deviation(const MetricRow& x, const MetricRow& y) {
  return std::max({value_deviation(x.moebius, y.moebius),
                   value_deviation(x.sibony, y.sibony),
                   value_deviation(x.green, y.green)});
}

void finalize(VerificationReport& report, std::span<const double> violations,
              std::span<const Point> witnesses) {
  const std::size_t worst = worst_index(violations, witnesses);
  if (worst != kNoIndex) {
    report.max_violation = violations[worst];
    if (worst < witnesses.size()) report.witness = witnesses[worst];
  }
  report.pass = report.max_violation <= report.tolerance;
}

VerificationReport make_report(std::string name, std::uint64_t seed,
                               std::size_t count, double tol) {
  VerificationReport report;
  report.name = std::move(name);
  report.seed = seed;
  report.count = count;
  report.tolerance = tol;
  return report;
}

}  // namespace

VerificationReport check_inequality_chain(const DomainDescriptor& domain,
                                          const Point& a,
                                          const SampleSet& samples, double tol,
                                          Exec mode) {
  require_in_domain(domain.alpha, a, "check_inequality_chain");
  const std::vector<Point>& pts = samples.points;
  const std::size_t n = pts.size();
  VerificationReport report = make_report("chain", samples.seed, n, tol);
  if (n == 0) {
    report.pass = true;
    report.notes.push_back("no samples");
    return report;
  }

  const std::vector<MetricRow> rows = evaluate_rows(domain, a, pts, mode);
  const InvariantSet inv = rows[0].sibony.invariants_used;
  const bool strict =
      inv.sigma >= 2 && samples.region.kind == Region::Kind::OffV0;
  const bool rational = domain.rational();
  const bool mu_is_one = inv.mu.has_value() && *inv.mu == 1.0;

  std::vector<double> viol(n, 0.0);
  std::vector<double> margins(strict ? n : 0, kInf);
  for_each_index(mode, n, [&](std::size_t i) {
    const double m = *rows[i].moebius.value;
    const double s = *rows[i].sibony.value;
    double v = m - s;
    double margin = kInf;
    const bool g_known = rows[i].green.known();
    const double g = g_known ? *rows[i].green.value : 0.0;
    if (g_known) v = std::max(v, s - g);
    if (strict) {
      if (rational) {
        if (mu_is_one) {
          v = std::max(v, std::abs(m - s));  // regime says m = s exactly
        } else {
          margin = std::min(margin, s - m);
        }
        margin = std::min(margin, g - s);
      } else {
        v = std::max(v, std::abs(m));    // m vanishes identically
        margin = std::min(margin, s);    // 0 = m < s strictly
      }
    }
    viol[i] = v;
    if (strict) margins[i] = margin;
  });

  std::size_t unknown_count = 0;
  for (const MetricRow& row : rows) {
    if (!row.green.known()) ++unknown_count;
  }
  if (unknown_count > 0) {
    report.notes.push_back("s <= g leg skipped at " +
                           std::to_string(unknown_count) +
                           " samples: Green value unknown");
  }

  finalize(report, viol, pts);
  if (strict) {
    std::size_t worst_margin = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (margins[i] < margins[worst_margin] ||
          (margins[i] == margins[worst_margin] &&
           lex_less(pts[i], pts[worst_margin]))) {
        worst_margin = i;
      }
    }
    report.margin_min = margins[worst_margin];
    if (!(margins[worst_margin] > 0.0)) {
      report.max_violation = kInf;
      report.witness = pts[worst_margin];
      report.notes.push_back("strict inequality violated: margin <= 0");
      report.pass = false;
    }
  }
  return report;
}

VerificationReport check_invariances(const DomainDescriptor& domain,
                                     const Point& a, const SampleSet& samples,
                                     double tol, Exec mode) {
  require_in_domain(domain.alpha, a, "check_invariances");
  const std::vector<Point>& pts = samples.points;
  const std::size_t n = pts.size();
  VerificationReport report = make_report("invariance", samples.seed, n, tol);
  if (n == 0) {
    report.pass = true;
    report.notes.push_back("no samples");
    return report;
  }

  const std::vector<MetricRow> base_rows = evaluate_rows(domain, a, pts, mode);

  constexpr std::size_t kThetaDraws = 3;
  std::mt19937_64 rng(samples.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::vector<double>> thetas(
      kThetaDraws, std::vector<double>(domain.dimension()));
  for (auto& th : thetas) {
    for (double& t : th) t = 2.0 * std::numbers::pi * uniform53(rng);
  }
  std::vector<Point> rotated_a;
  rotated_a.reserve(kThetaDraws);
  for (const auto& th : thetas) rotated_a.push_back(rotate(a, th));

  const auto scale_step = [](double t) {
    return ReductionTrace{{ReductionStep{ReductionStep::Kind::Scale, {}, {t}}}};
  };
  const DomainDescriptor half = apply_trace_domain(scale_step(0.5), domain);
  const DomainDescriptor twice = apply_trace_domain(scale_step(2.0), domain);

  std::vector<double> viol(n, 0.0);
  guarded_for(mode, n, [&](std::size_t i) {
    double dev = 0.0;
    for (std::size_t k = 0; k < kThetaDraws; ++k) {
      const MetricRow row =
          evaluate_all(domain, rotated_a[k], rotate(pts[i], thetas[k]));
      dev = std::max(dev, row_deviation(base_rows[i], row));
    }
    dev = std::max(dev, row_deviation(base_rows[i], evaluate_all(half, a, pts[i])));
    dev = std::max(dev, row_deviation(base_rows[i], evaluate_all(twice, a, pts[i])));
    viol[i] = dev;
  });

  finalize(report, viol, pts);
  return report;
}

double log_candidate_line_laplacian(std::span<const double> alpha, double mu,
                                    const Point& p, const Point& w,
                                    ComplexScalar zeta, double h) {
  if (p.size() != alpha.size() || w.size() != alpha.size()) {
    fail(ErrorKind::DimensionMismatch,
         "line base and direction must match the exponent dimension");
  }
  const auto f = [&](ComplexScalar t) {
    Point z(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) z[j] = p[j] + t * w[j];
    const LogMagnitude lm = log_abs_monomial(alpha, z);
    if (lm.is_zero()) {
      fail(ErrorKind::DomainViolation,
           "stencil point hits a coordinate zero of the line");
    }
    return 2.0 / mu * lm.value;
  };
  const ComplexScalar ih(0.0, h);
  return (f(zeta + h) + f(zeta - h) + f(zeta + ih) + f(zeta - ih) -
          4.0 * f(zeta)) /
         (h * h);
}

VerificationReport check_extremal_candidate(const DomainDescriptor& domain,
                                            const Point& a, double tol,
                                            std::span<const double> step_schedule,
                                            std::uint64_t seed,
                                            std::size_t count, Exec mode) {
  require_all_positive(domain, "check_extremal_candidate");
  require_in_domain(domain.alpha, a, "check_extremal_candidate");
  const InvariantSet inv = invariant_set(domain.alpha, a);
  if (inv.sigma < 2) {
    fail(ErrorKind::PreconditionViolation,
         "check_extremal_candidate needs sigma(a) >= 2, got " +
             std::to_string(inv.sigma));
  }
  if (step_schedule.size() < 3) {
    fail(ErrorKind::PreconditionViolation,
         "step schedule needs at least three steps");
  }
  for (std::size_t k = 0; k < step_schedule.size(); ++k) {
    if (!(step_schedule[k] > 0.0) || !std::isfinite(step_schedule[k]) ||
        (k > 0 && !(step_schedule[k] < step_schedule[k - 1]))) {
      fail(ErrorKind::PreconditionViolation,
           "step schedule must be positive and strictly decreasing");
    }
  }
  const double mu = *inv.mu;
  const std::size_t n = domain.dimension();
  const std::span<const double> alpha = domain.alpha.span();

  VerificationReport report = make_report("extremal", seed, count, tol);
  std::vector<double> viol;
  std::vector<Point> wit;

  // (i) the candidate vanishes at the base point
  {
    const LogMagnitude lm = log_abs_monomial(alpha, a);
    viol.push_back(lm.is_zero() ? 0.0 : std::exp(2.0 / mu * lm.value));
    wit.push_back(a);
  }

  // (ii) bounded by 1 on domain samples
  {
    SampleOptions sopts;
    sopts.seed = seed;
    sopts.count = count;
    const SampleSet samples = sample_points(domain, sopts);
    std::vector<double> leg(count);
    for_each_index(mode, count, [&](std::size_t i) {
      leg[i] = u_power(alpha, mu, samples.points[i]) - 1.0;
    });
    viol.insert(viol.end(), leg.begin(), leg.end());
    wit.insert(wit.end(), samples.points.begin(), samples.points.end());
  }

  // (iii) discrete Laplacian of log u along seeded lines. Geometry keeps the
  // line's coordinate zeros far from the sampled parameter square (bases
  // have moduli >= 0.3, directions <= 0.05, so zeros sit at distance >= 6),
  // and each stencil is additionally vetted against its truncation-error
  // bound so a reported negative Laplacian can only be an implementation
  // error, not stencil noise.
  {
    constexpr std::size_t kLines = 64;
    constexpr std::size_t kPerLine = 8;
    const double h = kLaplacianStep;

    SampleOptions popts;
    popts.seed = seed ^ 0xa5a5a5a5deadbeefull;
    popts.count = kLines;
    popts.min_modulus = 0.3;
    const SampleSet bases = sample_points(domain, popts);

    std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
    struct Stencil {
      Point p;
      Point w;
      ComplexScalar zeta;
    };
    std::vector<Stencil> stencils;
    stencils.reserve(kLines * kPerLine);
    const double log_wlo = std::log(0.02);
    const double log_whi = std::log(0.05);
    for (std::size_t line = 0; line < kLines; ++line) {
      const Point& p = bases.points[line];
      bool line_done = false;
      for (int wtry = 0; wtry < 40 && !line_done; ++wtry) {
        Point w(n);
        for (std::size_t j = 0; j < n; ++j) {
          const double lr = log_wlo + uniform53(rng) * (log_whi - log_wlo);
          w[j] = std::polar(std::exp(lr),
                            2.0 * std::numbers::pi * uniform53(rng));
        }
        std::size_t got = 0;
        for (int ztry = 0; ztry < 200 && got < kPerLine; ++ztry) {
          const ComplexScalar zeta(uniform53(rng) - 0.5, uniform53(rng) - 0.5);
          double bound = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            const double r = std::abs(zeta + p[j] / w[j]);
            bound += (2.0 * alpha[j] / mu) / (r * r * r * r);
          }
          if (h * h * bound > tol / 4.0) continue;
          stencils.push_back({p, w, zeta});
          ++got;
        }
        line_done = got == kPerLine;
        if (!line_done) stencils.resize(stencils.size() - got);
      }
      if (!line_done) {
        fail(ErrorKind::SamplingExhausted,
             "could not vet enough Laplacian stencils; exponents too large "
             "for the stencil tolerance");
      }
    }

    std::vector<double> leg(stencils.size());
    std::vector<Point> legw(stencils.size());
    guarded_for(mode, stencils.size(), [&](std::size_t i) {
      const Stencil& st = stencils[i];
      leg[i] = -log_candidate_line_laplacian(alpha, mu, st.p, st.w, st.zeta, h);
      Point z(n);
      for (std::size_t j = 0; j < n; ++j) z[j] = st.p[j] + st.zeta * st.w[j];
      legw[i] = std::move(z);
    });
    viol.insert(viol.end(), leg.begin(), leg.end());
    wit.insert(wit.end(), legw.begin(), legw.end());
    report.extras["stencils"] = static_cast<double>(stencils.size());
  }

  // (iv) second central differences at the base point. Along a single
  // vanishing coordinate the other zeros keep u identically 0; along the
  // diagonal of all vanishing coordinates u follows an exact power law, so
  // successive log-ratios of the difference quotients must agree.
  {
    std::vector<std::size_t> sigma_set;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] == ComplexScalar(0.0, 0.0)) sigma_set.push_back(j);
    }
    for (std::size_t j : sigma_set) {
      double v = 0.0;
      Point q = a;
      for (double h : step_schedule) {
        q = a;
        q[j] += h;
        if (!log_abs_monomial(alpha, q).is_zero()) {
          v = kInf;  // u must vanish identically on this line
          break;
        }
      }
      viol.push_back(v);
      wit.push_back(q);
    }
    {
      std::vector<double> log_d2;
      Point q = a;
      for (double h : step_schedule) {
        q = a;
        for (std::size_t j : sigma_set) q[j] += h;
        const LogMagnitude lm = log_abs_monomial(alpha, q);
        if (lm.is_zero()) {
          fail(ErrorKind::PreconditionViolation,
               "diagonal difference collapsed to zero; schedule too small");
        }
        log_d2.push_back(std::log(2.0) + 2.0 / mu * lm.value -
                         2.0 * std::log(h));
      }
      double v = -kInf;
      for (std::size_t k = 0; k + 2 < log_d2.size(); ++k) {
        const double r1 = log_d2[k + 1] - log_d2[k];
        const double r2 = log_d2[k + 2] - log_d2[k + 1];
        v = std::max(v, std::abs(r2 - r1) - kRatioAgreement);
      }
      viol.push_back(v);
      wit.push_back(q);
    }
  }

  finalize(report, viol, wit);
  return report;
}

DiscCandidate default_disc_candidate() {
  return [](std::span<const double> alpha, const Point& z) {
    const LogMagnitude lm = log_abs_monomial(alpha, z);
    return lm.is_zero() ? 0.0 : std::exp(2.0 * lm.value);
  };
}

DiscCandidate power_disc_candidate(double mu_prime) {
  if (!(mu_prime > 0.0) || !std::isfinite(mu_prime)) {
    fail(ErrorKind::PreconditionViolation,
         "candidate exponent must be positive and finite");
  }
  return [mu_prime](std::span<const double> alpha, const Point& z) {
    const LogMagnitude lm = log_abs_monomial(alpha, z);
    return lm.is_zero() ? 0.0 : std::exp(2.0 * lm.value / mu_prime);
  };
}

VerificationReport check_disc_reduction(const DomainDescriptor& domain,
                                        const Point& a,
                                        const DiscCandidate& u_candidate,
                                        double tol, std::uint64_t seed,
                                        Exec mode) {
  require_all_positive(domain, "check_disc_reduction");
  require_in_domain(domain.alpha, a, "check_disc_reduction");
  if (!u_candidate) {
    fail(ErrorKind::PreconditionViolation, "candidate must be callable");
  }
  const InvariantSet inv = invariant_set(domain.alpha, a);
  if (inv.sigma < 2) {
    fail(ErrorKind::PreconditionViolation,
         "check_disc_reduction needs sigma(a) >= 2");
  }
  const std::size_t n = domain.dimension();
  if (!(inv.mu.has_value() && *inv.mu == 1.0) ||
      a[n - 1] != ComplexScalar(0.0, 0.0) ||
      domain.alpha.entries[n - 1] != 1.0) {
    fail(ErrorKind::PreconditionViolation,
         "check_disc_reduction expects the normalize_for_disc form: mu(a) = 1 "
         "attained at the last coordinate");
  }

  constexpr std::size_t kDraws = 10;
  std::mt19937_64 rng(seed ^ 0x853c49e6748fea9bull);
  std::vector<Point> leads(kDraws, Point(n - 1));
  for (auto& lead : leads) {
    for (auto& c : lead) {
      c = ComplexScalar(3.0 * (uniform53(rng) - 0.5),
                        3.0 * (uniform53(rng) - 0.5));
    }
  }

  std::vector<ComplexScalar> grid;
  for (int mi = 1; mi <= 19; ++mi) {
    const double r = 0.05 * mi;
    for (int k = 0; k < 8; ++k) {
      grid.push_back(std::polar(r, 2.0 * std::numbers::pi * k / 8.0));
    }
  }

  VerificationReport report = make_report("disc", seed, grid.size(), tol);
  std::vector<double> viol(grid.size());
  std::vector<double> ratio(grid.size());
  std::vector<Point> wit(grid.size());
  guarded_for(mode, grid.size(), [&](std::size_t i) {
    const ComplexScalar zeta = grid[i];
    double v2_first = 0.0;
    double v_first = 0.0;
    double indep = 0.0;
    for (std::size_t d = 0; d < kDraws; ++d) {
      Point lambda = leads[d];
      lambda.push_back(zeta);
      const Point image = covering_map(domain.alpha, lambda);
      const double v2 = u_candidate(domain.alpha.span(), image);
      const double v = std::sqrt(v2);
      if (d == 0) {
        v2_first = v2;
        v_first = v;
        wit[i] = image;
      } else {
        const double denom = v_first > 0.0 ? v_first : 1.0;
        indep = std::max(indep, std::abs(v - v_first) / denom);
      }
    }
    const double bound = v2_first - std::norm(zeta);
    viol[i] = std::max(indep, bound);
    ratio[i] = v2_first / std::norm(zeta);
  });

  finalize(report, viol, wit);
  report.extras["ratio_max"] = *std::max_element(ratio.begin(), ratio.end());
  return report;
}

VerificationReport check_covering_identities(const DomainDescriptor& domain,
                                             const SampleSet& samples,
                                             double tol, Exec mode) {
  require_all_positive(domain, "check_covering_identities");
  const std::vector<Point>& pts = samples.points;
  const std::size_t n = pts.size();
  VerificationReport report = make_report("covering", samples.seed, n, tol);
  if (n == 0) {
    report.pass = true;
    report.notes.push_back("no samples");
    return report;
  }
  const double alpha_last = domain.alpha.entries.back();

  std::vector<double> viol(n);
  guarded_for(mode, n, [&](std::size_t i) {
    // magnitude identity, with the sample reused as a lambda value
    const Point& lambda = pts[i];
    const Point image = covering_map(domain.alpha, lambda);
    const LogMagnitude lm = log_abs_monomial(domain.alpha.span(), image);
    const double id_viol =
        std::abs(lm.value - alpha_last * std::log(std::abs(lambda.back())));
    // preimage/map roundtrip on the sample as a domain point
    const Point back = covering_map(domain.alpha,
                                    covering_preimage(domain.alpha, pts[i]));
    double rt = 0.0;
    for (std::size_t j = 0; j < back.size(); ++j) {
      rt = std::max(rt, std::abs(back[j] - pts[i][j]) / std::abs(pts[i][j]));
    }
    viol[i] = std::max(id_viol, rt);
  });

  finalize(report, viol, pts);
  return report;
}

DiscNormalization normalize_for_disc(const DomainDescriptor& domain,
                                     const Point& a) {
  require_all_positive(domain, "normalize_for_disc");
  require_in_domain(domain.alpha, a, "normalize_for_disc");
  const InvariantSet inv = invariant_set(domain.alpha, a);
  if (inv.sigma < 2) {
    fail(ErrorKind::PreconditionViolation,
         "normalize_for_disc needs sigma(a) >= 2");
  }
  const double mu = *inv.mu;
  const std::size_t n = domain.dimension();
  std::size_t jstar = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] == ComplexScalar(0.0, 0.0) && domain.alpha.entries[j] == mu) {
      jstar = j;
      break;
    }
  }
  std::vector<std::size_t> perm;
  perm.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != jstar) perm.push_back(j);
  }
  perm.push_back(jstar);

  ReductionTrace trace;
  trace.steps.push_back({ReductionStep::Kind::Permute, std::move(perm), {}});
  trace.steps.push_back({ReductionStep::Kind::Scale, {}, {1.0, mu}});

  auto [alpha2, a2] = apply_trace(trace, domain.alpha, a);
  DomainDescriptor domain2 = apply_trace_domain(trace, domain);
  return {std::move(domain2), std::move(a2), std::move(trace)};
}

namespace {

VerificationReport skipped_report(std::string name, const SuiteOptions& opt,
                                  std::size_t sigma) {
  VerificationReport report = make_report(std::move(name), opt.seed, 0, 0.0);
  report.pass = true;
  report.notes.push_back(
      "skipped: sigma(base point) = " + std::to_string(sigma) +
      " < 2 after exponent canonicalization");
  return report;
}

}  // namespace

std::vector<VerificationReport> run_suite(const DomainDescriptor& domain,
                                          const Point& a,
                                          std::string_view suite,
                                          const SuiteOptions& options) {
  static constexpr std::string_view kSuites[] = {
      "chain", "invariance", "extremal", "covering", "disc", "all"};
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) ==
      std::end(kSuites)) {
    fail(ErrorKind::PreconditionViolation,
         "unknown suite: " + std::string(suite));
  }
  require_in_domain(domain.alpha, a, "run_suite");
  const bool all = suite == "all";
  std::vector<VerificationReport> out;

  if (all || suite == "chain") {
    SampleOptions sopts;
    sopts.seed = options.seed;
    sopts.count = options.count;
    sopts.region = Region::off_v0();
    out.push_back(check_inequality_chain(
        domain, a, sample_points(domain, sopts), options.tolerance,
        options.mode));
  }
  if (all || suite == "invariance") {
    SampleOptions sopts;
    sopts.seed = options.seed;
    sopts.count = options.count;
    out.push_back(check_invariances(domain, a, sample_points(domain, sopts),
                                    options.tolerance, options.mode));
  }
  if (all || suite == "extremal" || suite == "covering" || suite == "disc") {
    const ReducedSystem red = reduce_to_positive(domain.alpha, {a});
    const DomainDescriptor rdom = apply_trace_domain(red.trace, domain);
    const Point& ra = red.points[0];
    const InvariantSet rinv = invariant_set(rdom.alpha, ra);
    if (all || suite == "extremal") {
      if (rinv.sigma >= 2) {
        out.push_back(check_extremal_candidate(
            rdom, ra, options.laplacian_tolerance, kDefaultStepSchedule,
            options.seed, options.count, options.mode));
      } else {
        out.push_back(skipped_report("extremal", options, rinv.sigma));
      }
    }
    if (all || suite == "covering") {
      SampleOptions sopts;
      sopts.seed = options.seed;
      sopts.count = options.count;
      out.push_back(check_covering_identities(
          rdom, sample_points(rdom, sopts), options.tolerance, options.mode));
    }
    if (all || suite == "disc") {
      if (rinv.sigma >= 2) {
        const DiscNormalization norm = normalize_for_disc(rdom, ra);
        out.push_back(check_disc_reduction(norm.domain, norm.base,
                                           default_disc_candidate(),
                                           options.tolerance, options.seed,
                                           options.mode));
      } else {
        out.push_back(skipped_report("disc", options, rinv.sigma));
      }
    }
  }
  return out;
}

namespace {

double clamp_finite(double v) {
  if (std::isfinite(v)) return v;
  return v < 0.0 ? -1e308 : 1e308;  // NaN lands on the failing side
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["seed"] = r.seed;
  j["count"] = r.count;
  j["tolerance"] = r.tolerance;
  j["max_violation"] = clamp_finite(r.max_violation);
  if (r.margin_min.has_value()) {
    j["margin_min"] = clamp_finite(*r.margin_min);
  } else {
    j["margin_min"] = nullptr;
  }
  j["pass"] = r.pass;
  if (r.witness.has_value()) {
    nlohmann::json w = nlohmann::json::array();
    for (const ComplexScalar& c : *r.witness) {
      w.push_back({c.real(), c.imag()});
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  for (const auto& [key, value] : r.extras) j[key] = clamp_finite(value);
  return j;
}

}  // namespace

std::string report_to_json_string(const VerificationReport& report,
                                  int indent) {
  return report_json(report).dump(indent);
}

std::string reports_to_json_string(std::span<const VerificationReport> reports,
                                   int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerificationReport& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

}  // namespace reinhardt
