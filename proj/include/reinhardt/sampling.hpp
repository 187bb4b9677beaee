#ifndef REINHARDT_SAMPLING_HPP
#define REINHARDT_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "reinhardt/domain.hpp"

namespace reinhardt {

/// Acceptance region for rejection sampling.
///  - FullDomain: z in D_alpha.
///  - OffV0:      additionally every coordinate nonzero (z off the union of
///                coordinate hyperplanes).
///  - NearBasePoint: additionally |z - base|_2 <= radius.
struct Region {
  enum class Kind { FullDomain, OffV0, NearBasePoint };
  Kind kind = Kind::FullDomain;
  Point base;          // NearBasePoint only
  double radius = 0.0;  // NearBasePoint only

  static Region full_domain() { return {}; }
  static Region off_v0() { return {Kind::OffV0, {}, 0.0}; }
  static Region near_base(Point base, double radius) {
    return {Kind::NearBasePoint, std::move(base), radius};
  }
};

struct SampleOptions {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  Region region;
  // Log-uniform modulus band [min_modulus, 1) per coordinate before
  // rejection; keeps coordinates off zero without starving acceptance.
  double min_modulus = 1e-3;
};

struct SampleSet {
  std::uint64_t seed = 0;
  Region region;
  std::vector<Point> points;
};

/// Deterministic rejection sampler: given identical (domain, options) the
/// returned points are bit-identical, independent of platform and thread
/// count (a single serial mt19937_64 stream with a fixed draws-per-attempt
/// layout). Throws SamplingExhausted when the retry budget runs out.
SampleSet sample_points(const DomainDescriptor& domain,
                        const SampleOptions& options);

}  // namespace reinhardt

#endif  // REINHARDT_SAMPLING_HPP
