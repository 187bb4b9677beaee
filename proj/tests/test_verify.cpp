#include "reinhardt/verify.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "reinhardt/errors.hpp"
#include "test_util.hpp"

using namespace reinhardt;

namespace {

DomainDescriptor dom(std::initializer_list<double> alpha,
                     TypeOverride kind = TypeOverride::Auto) {
  return make_domain(ExponentVector(std::vector<double>(alpha)), kind);
}

SampleSet samples_for(const DomainDescriptor& d, std::uint64_t seed,
                      std::size_t count, Region region) {
  SampleOptions o;
  o.seed = seed;
  o.count = count;
  o.region = region;
  return sample_points(d, o);
}

const Point kOrigin2 = pt({{0.0, 0.0}, {0.0, 0.0}});

}  // namespace

TEST_CASE("chain check passes in the strict regime") {
  const DomainDescriptor d = dom({3.0, 2.0});
  const SampleSet s = samples_for(d, 1, 1000, Region::off_v0());
  const VerificationReport r =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance);
  CHECK(r.pass);
  CHECK(r.name == "chain");
  CHECK(r.count == 1000);
  CHECK(r.max_violation <= kDefaultCheckTolerance);
  REQUIRE(r.margin_min.has_value());
  CHECK(*r.margin_min > 0.0);
}

TEST_CASE("chain check sees m equal to s when the minimal exponent is one") {
  const DomainDescriptor d = dom({2.0, 1.0});
  const SampleSet s = samples_for(d, 2, 500, Region::off_v0());
  const VerificationReport r =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance);
  CHECK(r.pass);
  // the m = s leg is folded into the violation; equality holds to 1e-10
  CHECK(r.max_violation <= 1e-10);
  REQUIRE(r.margin_min.has_value());
  CHECK(*r.margin_min > 0.0);  // s < g margin
}

TEST_CASE("chain check skips the unknown Green leg and says so") {
  const DomainDescriptor d =
      dom({1.0, 1.41421356237309}, TypeOverride::Irrational);
  const SampleSet s = samples_for(d, 3, 400, Region::off_v0());
  const VerificationReport r =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance);
  CHECK(r.pass);
  REQUIRE_FALSE(r.notes.empty());
  bool mentions_unknown = false;
  for (const std::string& n : r.notes) {
    mentions_unknown = mentions_unknown ||
                       n.find("Green value unknown") != std::string::npos;
  }
  CHECK(mentions_unknown);
  // the strict leg still reports a positive margin for 0 = m < s
  REQUIRE(r.margin_min.has_value());
  CHECK(*r.margin_min > 0.0);
}

TEST_CASE("chain check encodes a violated strict margin as infinite") {
  // hand-built sample set declared off V0 but containing a point on it: the
  // strict s < g margin degenerates to 0 there
  const DomainDescriptor d = dom({2.0, 1.0});
  SampleSet s;
  s.seed = 0;
  s.region = Region::off_v0();
  s.points.push_back(pt({{0.0, 0.0}, {0.3, 0.0}}));
  const VerificationReport r =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance);
  CHECK_FALSE(r.pass);
  CHECK(std::isinf(r.max_violation));
  REQUIRE(r.margin_min.has_value());
  CHECK(*r.margin_min == 0.0);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)[0] == ComplexScalar(0.0, 0.0));
  // pass stays equivalent to max_violation <= tolerance
  CHECK(r.pass == (r.max_violation <= r.tolerance));
}

TEST_CASE("chain check at the base point itself is all zeros") {
  const DomainDescriptor d = dom({2.0, 1.0});
  const Point a = pt({{0.5, 0.0}, {0.5, 0.0}});
  SampleSet s;
  s.seed = 0;
  s.region = Region::full_domain();
  s.points.push_back(a);
  const VerificationReport r = check_inequality_chain(d, a, s, 1e-14);
  CHECK(r.pass);
  CHECK(r.max_violation == 0.0);
}

TEST_CASE("invariance check holds for rotations and exponent rescaling") {
  const DomainDescriptor d = dom({2.0, 1.0});
  const SampleSet s = samples_for(d, 4, 300, Region::full_domain());
  const VerificationReport r =
      check_invariances(d, kOrigin2, s, kDefaultCheckTolerance);
  CHECK(r.pass);
  CHECK(r.name == "invariance");
  CHECK(r.max_violation <= 1e-10);
}

TEST_CASE("invariance check covers the unknown-Green configuration") {
  const DomainDescriptor d =
      dom({1.0, 1.41421356237309}, TypeOverride::Irrational);
  const SampleSet s = samples_for(d, 4, 200, Region::full_domain());
  const VerificationReport r =
      check_invariances(d, kOrigin2, s, kDefaultCheckTolerance);
  CHECK(r.pass);
}

TEST_CASE("scaled-exponent input evaluates identically to its primitive form") {
  const DomainDescriptor scaled = dom({1.5, 1.0});
  const DomainDescriptor prim = dom({3.0, 2.0});
  const Point z = pt({{0.45, 0.21}, {0.52, -0.17}});
  const MetricRow a = evaluate_all(scaled, kOrigin2, z);
  const MetricRow b = evaluate_all(prim, kOrigin2, z);
  CHECK(*a.moebius.value == *b.moebius.value);
  CHECK(*a.sibony.value == *b.sibony.value);
  CHECK(*a.green.value == *b.green.value);
}

TEST_CASE("doubling an irrational exponent vector leaves sibony unchanged") {
  const double root2 = 1.41421356237309;
  const DomainDescriptor d1 = dom({1.0, root2}, TypeOverride::Irrational);
  const DomainDescriptor d2 = dom({2.0, 2.0 * root2}, TypeOverride::Irrational);
  const Point z = pt({{0.45, 0.21}, {0.52, -0.17}});
  const MetricValue s1 = sibony_value(d1, kOrigin2, z);
  const MetricValue s2 = sibony_value(d2, kOrigin2, z);
  CHECK(*s1.value == *s2.value);
}

TEST_CASE("extremal candidate check passes on the canonical configurations") {
  struct Config {
    DomainDescriptor d;
    Point a;
  };
  const Config configs[] = {
      {dom({2.0, 1.0}), kOrigin2},
      {dom({3.0, 2.0}), kOrigin2},
      {dom({5.0, 1.0, 2.0}), pt({{0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}})},
  };
  for (const Config& c : configs) {
    const VerificationReport r = check_extremal_candidate(
        c.d, c.a, kDefaultLaplacianTolerance, kDefaultStepSchedule, 0, 200);
    CHECK(r.pass);
    CHECK(r.name == "extremal");
    CHECK(r.max_violation <= kDefaultLaplacianTolerance);
    CHECK(r.extras.count("stencils") == 1);
    CHECK(r.extras.at("stencils") == 512.0);  // 64 lines x 8 stencils
  }
}

TEST_CASE("extremal candidate check rejects unusable inputs") {
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    check_extremal_candidate(dom({2.0, 1.0}), pt({{0.5, 0.0}, {0.5, 0.0}}));
  }));
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    check_extremal_candidate(dom({2.0, -1.0}), pt({{0.0, 0.0}, {1.0, 0.0}}));
  }));
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    const double short_schedule[] = {1e-2, 1e-3};
    check_extremal_candidate(dom({2.0, 1.0}), kOrigin2, 1e-6, short_schedule);
  }));
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    const double increasing[] = {1e-4, 1e-3, 1e-2};
    check_extremal_candidate(dom({2.0, 1.0}), kOrigin2, 1e-6, increasing);
  }));
}

TEST_CASE("line restriction of the log candidate is discretely harmonic") {
  // line z(t) = (t, c): log u pulls back to a multiple of log|t| plus a
  // constant, so the five-point Laplacian vanishes away from t = 0
  const std::vector<double> alpha{2.0, 1.0};
  const Point p = pt({{0.0, 0.0}, {0.5, 0.0}});
  const Point w = pt({{1.0, 0.0}, {0.0, 0.0}});
  const double lap = log_candidate_line_laplacian(
      alpha, 1.0, p, w, ComplexScalar(2.0, 0.3), kLaplacianStep);
  CHECK(std::abs(lap) <= 1e-6);

  // hitting the coordinate zero exactly is a structural error
  CHECK(throws_kind(ErrorKind::DomainViolation, [&] {
    log_candidate_line_laplacian(alpha, 1.0, p, w, ComplexScalar(0.0, 0.0),
                                 kLaplacianStep);
  }));
}

TEST_CASE("disc normalization permutes and rescales to a unit last exponent") {
  {
    const DiscNormalization norm = normalize_for_disc(dom({3.0, 2.0}), kOrigin2);
    CHECK(norm.domain.alpha.entries == std::vector<double>{1.5, 1.0});
    CHECK(norm.base == kOrigin2);
    REQUIRE(norm.trace.steps.size() == 2);
    CHECK(norm.trace.steps[0].kind == ReductionStep::Kind::Permute);
    CHECK(norm.trace.steps[1].kind == ReductionStep::Kind::Scale);
  }
  {
    const Point a = pt({{0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    const DiscNormalization norm = normalize_for_disc(dom({5.0, 1.0, 2.0}), a);
    CHECK(norm.domain.alpha.entries == std::vector<double>{5.0, 2.0, 1.0});
    CHECK(norm.base == pt({{0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}}));
  }
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    normalize_for_disc(dom({2.0, 1.0}), pt({{0.5, 0.0}, {0.0, 0.0}}));
  }));
}

TEST_CASE("disc reduction attains the boundary ratio for the default candidate") {
  const DiscNormalization norm = normalize_for_disc(dom({2.0, 1.0}), kOrigin2);
  const VerificationReport r = check_disc_reduction(
      norm.domain, norm.base, default_disc_candidate(), kDefaultCheckTolerance);
  CHECK(r.pass);
  CHECK(r.name == "disc");
  REQUIRE(r.extras.count("ratio_max") == 1);
  CHECK(std::abs(r.extras.at("ratio_max") - 1.0) <= 1e-10);
}

TEST_CASE("disc reduction accepts the zero candidate") {
  const DiscNormalization norm = normalize_for_disc(dom({2.0, 1.0}), kOrigin2);
  const DiscCandidate zero = [](std::span<const double>, const Point&) {
    return 0.0;
  };
  const VerificationReport r = check_disc_reduction(
      norm.domain, norm.base, zero, kDefaultCheckTolerance);
  CHECK(r.pass);
  CHECK(r.extras.at("ratio_max") == 0.0);
}

TEST_CASE("disc reduction flags an overgrown candidate exponent") {
  // exponent 2 instead of 1: v^2(zeta) = |zeta| beats |zeta|^2 near 0
  const DiscNormalization norm = normalize_for_disc(dom({2.0, 1.0}), kOrigin2);
  const VerificationReport r = check_disc_reduction(
      norm.domain, norm.base, power_disc_candidate(2.0), kDefaultCheckTolerance);
  CHECK_FALSE(r.pass);
  // worst bound violation |zeta| - |zeta|^2 peaks at |zeta| = 0.5
  CHECK(r.max_violation == doctest::Approx(0.25).epsilon(1e-9));
  // reported ratio sup is 1/min|zeta| on the grid
  CHECK(r.extras.at("ratio_max") == doctest::Approx(20.0).epsilon(1e-9));
}

TEST_CASE("disc reduction insists on the normalized form") {
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    check_disc_reduction(dom({3.0, 2.0}), kOrigin2, default_disc_candidate(),
                         kDefaultCheckTolerance);
  }));
  CHECK(throws_kind(ErrorKind::PreconditionViolation, [] {
    check_disc_reduction(dom({2.0, 1.0}), kOrigin2, DiscCandidate{},
                         kDefaultCheckTolerance);
  }));
}

TEST_CASE("covering identities hold on sampled points") {
  const DomainDescriptor d = dom({2.0, 1.0});
  const SampleSet s = samples_for(d, 6, 100, Region::off_v0());
  const VerificationReport r = check_covering_identities(d, s, 1e-12);
  CHECK(r.pass);
  CHECK(r.name == "covering");
  CHECK(r.max_violation <= 1e-12);
}

TEST_CASE("covering identities hold for a non-unit last exponent") {
  const DomainDescriptor d = dom({5.0, 1.0, 2.0});
  const SampleSet s = samples_for(d, 6, 100, Region::off_v0());
  const VerificationReport r = check_covering_identities(d, s, 1e-10);
  CHECK(r.pass);
}

TEST_CASE("reports are identical across execution policies") {
  const DomainDescriptor d = dom({3.0, 2.0});
  const SampleSet s = samples_for(d, 8, 400, Region::off_v0());
  const VerificationReport serial =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance, Exec::Serial);
  const VerificationReport parallel =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance,
                             Exec::Parallel);
  CHECK(report_to_json_string(serial) == report_to_json_string(parallel));

  const VerificationReport es = check_extremal_candidate(
      d, kOrigin2, kDefaultLaplacianTolerance, kDefaultStepSchedule, 0, 100,
      Exec::Serial);
  const VerificationReport ep = check_extremal_candidate(
      d, kOrigin2, kDefaultLaplacianTolerance, kDefaultStepSchedule, 0, 100,
      Exec::Parallel);
  CHECK(report_to_json_string(es) == report_to_json_string(ep));
}

TEST_CASE("reports are reproducible from seed and parameters") {
  const DomainDescriptor d = dom({3.0, 2.0});
  SuiteOptions o;
  o.seed = 77;
  o.count = 150;
  const std::vector<VerificationReport> a = run_suite(d, kOrigin2, "all", o);
  const std::vector<VerificationReport> b = run_suite(d, kOrigin2, "all", o);
  CHECK(reports_to_json_string(a) == reports_to_json_string(b));
}

TEST_CASE("run_suite assembles the requested checks") {
  const DomainDescriptor d = dom({2.0, 1.0});
  SuiteOptions o;
  o.count = 100;
  {
    const auto reports = run_suite(d, kOrigin2, "all", o);
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].name == "chain");
    CHECK(reports[1].name == "invariance");
    CHECK(reports[2].name == "extremal");
    CHECK(reports[3].name == "covering");
    CHECK(reports[4].name == "disc");
    for (const auto& r : reports) CHECK(r.pass);
  }
  {
    const auto reports = run_suite(d, kOrigin2, "chain", o);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].name == "chain");
  }
  CHECK(throws_kind(ErrorKind::PreconditionViolation,
                    [&] { run_suite(d, kOrigin2, "bogus", o); }));
}

TEST_CASE("run_suite canonicalizes exponents before the covering checks") {
  // negative exponent: the suite must reduce to an all-positive system first
  const DomainDescriptor d = dom({2.0, -1.0});
  const Point a = pt({{0.0, 0.0}, {2.0, 0.0}});
  SuiteOptions o;
  o.count = 100;
  const auto reports = run_suite(d, a, "covering", o);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].pass);
}

TEST_CASE("run_suite degrades sigma-dependent checks to explicit skips") {
  const DomainDescriptor d = dom({2.0, 1.0});
  const Point a = pt({{0.5, 0.0}, {0.5, 0.0}});
  SuiteOptions o;
  o.count = 50;
  const auto reports = run_suite(d, a, "all", o);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.pass);
  bool extremal_skipped = false, disc_skipped = false;
  for (const auto& r : reports) {
    for (const std::string& n : r.notes) {
      if (n.find("skipped") != std::string::npos) {
        extremal_skipped = extremal_skipped || r.name == "extremal";
        disc_skipped = disc_skipped || r.name == "disc";
      }
    }
  }
  CHECK(extremal_skipped);
  CHECK(disc_skipped);
}

TEST_CASE("run_suite handles the irrational unknown-Green base point") {
  const DomainDescriptor d =
      dom({1.0, 1.41421356237309}, TypeOverride::Irrational);
  SuiteOptions o;
  o.count = 100;
  const auto reports = run_suite(d, kOrigin2, "all", o);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("report JSON carries the full contract") {
  const DomainDescriptor d = dom({3.0, 2.0});
  const SampleSet s = samples_for(d, 5, 50, Region::off_v0());
  const VerificationReport r =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance);
  const nlohmann::json j = nlohmann::json::parse(report_to_json_string(r, 2));
  for (const char* key :
       {"name", "seed", "count", "tolerance", "max_violation", "margin_min",
        "pass", "witness"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["name"] == "chain");
  CHECK(j["seed"] == 5);
  CHECK(j["count"] == 50);
  CHECK(j["pass"] == true);
  REQUIRE(j["witness"].is_array());
  CHECK(j["witness"].size() == 2);       // one [re, im] pair per coordinate
  CHECK(j["witness"][0].size() == 2);
}

TEST_CASE("report JSON clamps non-finite violations") {
  const DomainDescriptor d = dom({2.0, 1.0});
  SampleSet s;
  s.seed = 0;
  s.region = Region::off_v0();
  s.points.push_back(pt({{0.0, 0.0}, {0.3, 0.0}}));
  const VerificationReport r =
      check_inequality_chain(d, kOrigin2, s, kDefaultCheckTolerance);
  REQUIRE(std::isinf(r.max_violation));
  const nlohmann::json j = nlohmann::json::parse(report_to_json_string(r));
  CHECK(j["max_violation"].get<double>() == 1e308);
  CHECK(j["pass"] == false);
  REQUIRE(j.contains("notes"));
  CHECK(j["notes"].size() >= 1);
}

TEST_CASE("reports_to_json_string emits an array in order") {
  const DomainDescriptor d = dom({2.0, 1.0});
  SuiteOptions o;
  o.count = 50;
  const auto reports = run_suite(d, kOrigin2, "all", o);
  const nlohmann::json j =
      nlohmann::json::parse(reports_to_json_string(reports, 2));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 5);
  CHECK(j[0]["name"] == "chain");
  CHECK(j[4]["name"] == "disc");
  CHECK(j[4].contains("ratio_max"));
}
