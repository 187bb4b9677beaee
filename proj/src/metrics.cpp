#include "reinhardt/metrics.hpp"

#include <cmath>

#include "reinhardt/errors.hpp"

namespace reinhardt {

namespace {

// Invariants are always computed after normalization: primitive integer
// vector for the rational type, raw alpha for the irrational type (where the
// branch formulas are scale invariant as expressions).
ExponentVector dispatch_exponents(const DomainDescriptor& domain) {
  if (!domain.rational()) return domain.alpha;
  std::vector<double> e(domain.classification.primitive.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    e[j] = static_cast<double>(domain.classification.primitive[j]);
  }
  return ExponentVector(std::move(e));
}

void require_pair(const DomainDescriptor& domain,
                  std::span<const ComplexScalar> a,
                  std::span<const ComplexScalar> z, const char* who) {
  require_in_domain(domain.alpha, a, who);
  require_in_domain(domain.alpha, z, who);
}

double disc_value(const DomainDescriptor& domain,
                  std::span<const ComplexScalar> a,
                  std::span<const ComplexScalar> z) {
  const auto& prim = domain.classification.primitive;
  return mobius_disc(monomial(prim, a), monomial(prim, z));
}

double power_of_abs_monomial(const ExponentVector& e,
                             std::span<const ComplexScalar> z,
                             double inverse_exponent) {
  const LogMagnitude lm = log_abs_monomial(e.span(), z);
  if (lm.is_zero()) return 0.0;
  return std::exp(lm.value / inverse_exponent);
}

}  // namespace

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::RationalMoebius: return "rational-moebius";
    case Branch::RationalGreen: return "rational-green";
    case Branch::RationalSibonySigmaLe1: return "rational-sibony-sigma-le1";
    case Branch::SibonySigmaGe2: return "sibony-sigma-ge2";
    case Branch::IrrationalMoebiusZero: return "irrational-moebius-zero";
    case Branch::IrrationalGreenSigma0: return "irrational-green-sigma0";
    case Branch::IrrationalGreenSigma1: return "irrational-green-sigma1";
    case Branch::IrrationalGreenSigmaGe2Unknown:
      return "irrational-green-sigma-ge2-unknown";
  }
  return "?";
}

MetricValue moebius_value(const DomainDescriptor& domain,
                          std::span<const ComplexScalar> a,
                          std::span<const ComplexScalar> z) {
  require_pair(domain, a, z, "moebius_value");
  const ExponentVector e = dispatch_exponents(domain);
  const InvariantSet inv = invariant_set(e, a);
  if (domain.rational()) {
    return MetricValue{disc_value(domain, a, z), Branch::RationalMoebius, inv};
  }
  return MetricValue{0.0, Branch::IrrationalMoebiusZero, inv};
}

MetricValue green_value(const DomainDescriptor& domain,
                        std::span<const ComplexScalar> a,
                        std::span<const ComplexScalar> z) {
  require_pair(domain, a, z, "green_value");
  const ExponentVector e = dispatch_exponents(domain);
  const InvariantSet inv = invariant_set(e, a);
  if (domain.rational()) {
    const double m = disc_value(domain, a, z);
    return MetricValue{std::pow(m, 1.0 / inv.r), Branch::RationalGreen, inv};
  }
  if (inv.sigma == 0) {
    return MetricValue{0.0, Branch::IrrationalGreenSigma0, inv};
  }
  if (inv.sigma == 1) {
    return MetricValue{power_of_abs_monomial(e, z, inv.r),
                       Branch::IrrationalGreenSigma1, inv};
  }
  return MetricValue{std::nullopt, Branch::IrrationalGreenSigmaGe2Unknown, inv};
}

MetricValue sibony_value(const DomainDescriptor& domain,
                         std::span<const ComplexScalar> a,
                         std::span<const ComplexScalar> z) {
  require_pair(domain, a, z, "sibony_value");
  const ExponentVector e = dispatch_exponents(domain);
  const InvariantSet inv = invariant_set(e, a);
  if (inv.sigma >= 2) {
    return MetricValue{power_of_abs_monomial(e, z, *inv.mu),
                       Branch::SibonySigmaGe2, inv};
  }
  if (domain.rational()) {
    const double m = disc_value(domain, a, z);
    return MetricValue{std::pow(m, 1.0 / inv.r),
                       Branch::RationalSibonySigmaLe1, inv};
  }
  if (inv.sigma == 0) {
    return MetricValue{0.0, Branch::IrrationalGreenSigma0, inv};
  }
  return MetricValue{power_of_abs_monomial(e, z, inv.r),
                     Branch::IrrationalGreenSigma1, inv};
}

MetricRow evaluate_all(const DomainDescriptor& domain,
                       std::span<const ComplexScalar> a,
                       std::span<const ComplexScalar> z) {
  return MetricRow{moebius_value(domain, a, z), sibony_value(domain, a, z),
                   green_value(domain, a, z)};
}

}  // namespace reinhardt
