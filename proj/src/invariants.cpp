#include "reinhardt/invariants.hpp"

#include <limits>

#include "reinhardt/errors.hpp"

namespace reinhardt {

std::size_t sigma_count(const ExponentVector& alpha,
                        std::span<const ComplexScalar> a) {
  require_in_domain(alpha, a, "sigma_count");
  std::size_t count = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (alpha.entries[j] > 0.0 && a[j] == ComplexScalar(0.0, 0.0)) ++count;
  }
  return count;
}

double mu_min(const ExponentVector& alpha, std::span<const ComplexScalar> a) {
  require_in_domain(alpha, a, "mu_min");
  double mu = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (alpha.entries[j] > 0.0 && a[j] == ComplexScalar(0.0, 0.0)) {
      mu = std::min(mu, alpha.entries[j]);
    }
  }
  if (mu == std::numeric_limits<double>::infinity()) {
    fail(ErrorKind::SigmaZero, "mu_min: base point has no vanishing coordinate "
                               "with positive exponent");
  }
  return mu;
}

double r_order(const ExponentVector& alpha, std::span<const ComplexScalar> a) {
  require_in_domain(alpha, a, "r_order");
  double sum = 0.0;
  bool any = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (alpha.entries[j] > 0.0 && a[j] == ComplexScalar(0.0, 0.0)) {
      sum += alpha.entries[j];
      any = true;
    }
  }
  return any ? sum : 1.0;
}

InvariantSet invariant_set(const ExponentVector& alpha,
                           std::span<const ComplexScalar> a) {
  InvariantSet inv;
  inv.sigma = sigma_count(alpha, a);
  inv.r = r_order(alpha, a);
  if (inv.sigma >= 1) inv.mu = mu_min(alpha, a);
  return inv;
}

}  // namespace reinhardt
