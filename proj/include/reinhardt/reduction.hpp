#ifndef REINHARDT_REDUCTION_HPP
#define REINHARDT_REDUCTION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "reinhardt/domain.hpp"

namespace reinhardt {

/// One structural reduction applied to an (alpha, point) system. Traces make
/// the internal canonicalization auditable and replayable.
struct ReductionStep {
  enum class Kind { SplitZeros, InvertNegatives, Rotate, Permute, Scale };
  Kind kind;
  // SplitZeros: kept indices. InvertNegatives: inverted indices.
  // Permute: new position i takes old index indices[i].
  std::vector<std::size_t> indices;
  // Rotate: per-coordinate angles. Scale: {num, den} with alpha mapped to
  // alpha * num / den; den is applied as a division so that, e.g., dividing
  // by an entry of alpha lands exactly on 1. A single parameter means den=1.
  std::vector<double> parameters;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Drops all zero entries of alpha and the corresponding coordinates of p.
/// No-op (inputs returned unchanged) when alpha has no zero entries.
std::pair<ExponentVector, Point> split_zero_exponents(
    const ExponentVector& alpha, const Point& p);

/// Flips the signs of negative entries of alpha and replaces the matching
/// coordinates of p by their reciprocals. Preserves |p^alpha|.
std::pair<ExponentVector, Point> invert_negative_exponents(
    const ExponentVector& alpha, const Point& p);

/// Coordinatewise multiplication by unit complex numbers e^{i theta_j}.
Point rotate(const Point& p, std::span<const double> thetas);

/// Holomorphic covering of D_alpha for all-positive alpha, taken with alpha
/// rescaled so its last entry is 1 (the formula's normalization; the map is
/// otherwise not magnitude compatible):
///   F(lambda) = (e^{l_1}, ..., e^{l_{n-1}},
///                l_n * exp(-(a_1 l_1 + ... + a_{n-1} l_{n-1})))
/// Satisfies |F(lambda)^alpha| = |lambda_n|^{alpha_n}.
Point covering_map(const ExponentVector& alpha, const Point& lambda);

/// Inverse construction on D_alpha with nonzero leading coordinates, using
/// the principal logarithm for lambda_1..lambda_{n-1}.
Point covering_preimage(const ExponentVector& alpha, const Point& z);

/// Applies one recorded step to an (alpha, point) pair.
std::pair<ExponentVector, Point> apply_step(const ReductionStep& step,
                                            const ExponentVector& alpha,
                                            const Point& p);

/// Replays a whole trace.
std::pair<ExponentVector, Point> apply_trace(const ReductionTrace& trace,
                                             const ExponentVector& alpha,
                                             const Point& p);

/// Carries a full descriptor through a trace without re-running type
/// detection: the rational primitive vector is split/flipped/permuted in
/// step with the entries (positive rescaling leaves it untouched), and the
/// stored scale factor is recomputed from the result.
DomainDescriptor apply_trace_domain(const ReductionTrace& trace,
                                    const DomainDescriptor& domain);

/// Canonicalization to an all-positive exponent system: zero-exponent
/// splitting followed by negative-exponent inversion, applied jointly to any
/// number of points. The trace records exactly the steps taken.
struct ReducedSystem {
  ExponentVector alpha;
  std::vector<Point> points;
  ReductionTrace trace;
};

ReducedSystem reduce_to_positive(const ExponentVector& alpha,
                                 const std::vector<Point>& points);

}  // namespace reinhardt

#endif  // REINHARDT_REDUCTION_HPP
