#include "reinhardt/sampling.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "reinhardt/complex_numerics.hpp"
#include "reinhardt/errors.hpp"

namespace reinhardt {

namespace {

// 53-bit uniform in [0,1); spelled out (rather than via distribution
// adaptors) so streams are reproducible across standard library versions.
double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool in_region(const Region& region, const Point& z) {
  switch (region.kind) {
    case Region::Kind::FullDomain:
      return true;
    case Region::Kind::OffV0:
      for (const ComplexScalar& c : z) {
        if (c == ComplexScalar(0.0, 0.0)) return false;
      }
      return true;
    case Region::Kind::NearBasePoint: {
      double d2 = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        d2 += std::norm(z[j] - region.base[j]);
      }
      return d2 <= region.radius * region.radius;
    }
  }
  return false;
}

}  // namespace

SampleSet sample_points(const DomainDescriptor& domain,
                        const SampleOptions& options) {
  if (options.count == 0) {
    fail(ErrorKind::PreconditionViolation, "sample count must be positive");
  }
  if (!(options.min_modulus > 0.0) || !(options.min_modulus < 1.0)) {
    fail(ErrorKind::PreconditionViolation,
         "modulus band lower edge must lie in (0, 1)");
  }
  const std::size_t n = domain.dimension();
  if (options.region.kind == Region::Kind::NearBasePoint) {
    if (options.region.base.size() != n) {
      fail(ErrorKind::DimensionMismatch,
           "region base point dimension does not match the domain");
    }
    if (!(options.region.radius > 0.0) ||
        !std::isfinite(options.region.radius)) {
      fail(ErrorKind::PreconditionViolation,
           "region radius must be positive and finite");
    }
  }

  std::mt19937_64 rng(options.seed);
  const double log_min = std::log(options.min_modulus);

  SampleSet set{options.seed, options.region, {}};
  set.points.reserve(options.count);

  const std::uint64_t budget = 10'000ull * options.count + 10'000ull;
  std::uint64_t attempts = 0;
  Point z(n);
  while (set.points.size() < options.count) {
    if (attempts++ >= budget) {
      fail(ErrorKind::SamplingExhausted,
           "retry budget exhausted after " + std::to_string(budget) +
               " attempts; region acceptance is degenerate");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double u_mod = uniform53(rng);
      const double u_phase = uniform53(rng);
      const double modulus = std::exp((1.0 - u_mod) * log_min);
      z[j] = std::polar(modulus, 2.0 * std::numbers::pi * u_phase);
    }
    if (!member_domain(domain.alpha, z)) continue;
    if (!in_region(options.region, z)) continue;
    set.points.push_back(z);
  }
  return set;
}

}  // namespace reinhardt
