#ifndef REINHARDT_METRICS_HPP
#define REINHARDT_METRICS_HPP

#include <optional>
#include <string_view>

#include "reinhardt/domain.hpp"
#include "reinhardt/invariants.hpp"

namespace reinhardt {

/// Formula branch that produced a value. The irrational Green function with
/// sigma(a) >= 2 has no known closed form and is reported as Unknown.
enum class Branch {
  RationalMoebius,
  RationalGreen,
  RationalSibonySigmaLe1,
  SibonySigmaGe2,
  IrrationalMoebiusZero,
  IrrationalGreenSigma0,
  IrrationalGreenSigma1,
  IrrationalGreenSigmaGe2Unknown,
};

std::string_view branch_name(Branch b);

/// A computed function value in [0,1) tagged with the branch used, or an
/// explicit Unknown (value absent) for the irrational sigma >= 2 Green case.
struct MetricValue {
  std::optional<double> value;
  Branch branch;
  InvariantSet invariants_used;

  bool known() const { return value.has_value(); }
};

/// Moebius pseudodistance m(a, z). Rational type: m_D(a^alpha, z^alpha) on
/// the unit disc, with alpha the primitive integer vector. Irrational type:
/// identically zero.
MetricValue moebius_value(const DomainDescriptor& domain,
                          std::span<const ComplexScalar> a,
                          std::span<const ComplexScalar> z);

/// Green function g(a, z). Rational: m_D(a^alpha, z^alpha)^(1/r(a)).
/// Irrational: 0 when sigma(a) == 0, |z^alpha|^(1/r(a)) when sigma(a) == 1,
/// Unknown when sigma(a) >= 2.
MetricValue green_value(const DomainDescriptor& domain,
                        std::span<const ComplexScalar> a,
                        std::span<const ComplexScalar> z);

/// Sibony function s(a, z). Coincides with the Green function when
/// sigma(a) <= 1; equals |z^alpha|^(1/mu(a)) when sigma(a) >= 2, for both
/// types.
MetricValue sibony_value(const DomainDescriptor& domain,
                         std::span<const ComplexScalar> a,
                         std::span<const ComplexScalar> z);

/// All three values at once, sharing the precondition checks; what the CLI
/// and the batch kernels emit per row.
struct MetricRow {
  MetricValue moebius;
  MetricValue sibony;
  MetricValue green;
};

MetricRow evaluate_all(const DomainDescriptor& domain,
                       std::span<const ComplexScalar> a,
                       std::span<const ComplexScalar> z);

}  // namespace reinhardt

#endif  // REINHARDT_METRICS_HPP
