#ifndef REINHARDT_INVARIANTS_HPP
#define REINHARDT_INVARIANTS_HPP

#include <optional>
#include <span>

#include "reinhardt/domain.hpp"

namespace reinhardt {

/// Base-point invariants driving branch dispatch. mu is absent iff sigma == 0;
/// when sigma >= 1, mu <= r with equality iff sigma == 1; r == 1 when
/// sigma == 0.
struct InvariantSet {
  std::size_t sigma = 0;
  std::optional<double> mu;
  double r = 1.0;
};

/// #{j : alpha_j > 0, a_j == 0}.
std::size_t sigma_count(const ExponentVector& alpha,
                        std::span<const ComplexScalar> a);

/// min{alpha_j : alpha_j > 0, a_j == 0}; requires sigma >= 1.
double mu_min(const ExponentVector& alpha, std::span<const ComplexScalar> a);

/// 1 when sigma == 0, otherwise the sum of alpha_j over the sigma index set
/// (the vanishing order of z^alpha - a^alpha at a).
double r_order(const ExponentVector& alpha, std::span<const ComplexScalar> a);

InvariantSet invariant_set(const ExponentVector& alpha,
                           std::span<const ComplexScalar> a);

}  // namespace reinhardt

#endif  // REINHARDT_INVARIANTS_HPP
