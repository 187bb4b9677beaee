#include "reinhardt/complex_numerics.hpp"

#include <cmath>
#include <limits>

#include "reinhardt/errors.hpp"

namespace reinhardt {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

bool LogMagnitude::is_zero() const { return value == kNegInf; }

double LogMagnitude::exp_value() const {
  return is_zero() ? 0.0 : std::exp(value);
}

LogMagnitude LogMagnitude::of_zero() { return LogMagnitude{kNegInf}; }

LogMagnitude LogMagnitude::of_log(double log_value) {
  return LogMagnitude{log_value};
}

double mobius_disc(ComplexScalar a, ComplexScalar z) {
  if (!(std::abs(a) < 1.0) || !(std::abs(z) < 1.0)) {
    fail(ErrorKind::DomainViolation,
         "mobius_disc: arguments must lie strictly inside the unit disc");
  }
  return std::abs((z - a) / (1.0 - std::conj(a) * z));
}

LogMagnitude log_abs_monomial(std::span<const double> alpha,
                              std::span<const ComplexScalar> z) {
  if (alpha.size() != z.size()) {
    fail(ErrorKind::DimensionMismatch,
         "log_abs_monomial: exponent/point length mismatch");
  }
  double sum = 0.0;
  bool hit_zero = false;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0.0) continue;
    const double mod = std::abs(z[j]);
    if (mod == 0.0) {
      if (alpha[j] < 0.0) {
        fail(ErrorKind::DomainViolation,
             "log_abs_monomial: zero coordinate at negative exponent");
      }
      hit_zero = true;  // keep scanning so negative-exponent zeros still throw
      continue;
    }
    sum += alpha[j] * std::log(mod);
  }
  return hit_zero ? LogMagnitude::of_zero() : LogMagnitude::of_log(sum);
}

double abs_monomial(std::span<const double> alpha,
                    std::span<const ComplexScalar> z) {
  return log_abs_monomial(alpha, z).exp_value();
}

ComplexScalar monomial(std::span<const long long> alpha,
                       std::span<const ComplexScalar> z) {
  if (alpha.size() != z.size()) {
    fail(ErrorKind::DimensionMismatch, "monomial: exponent/point length mismatch");
  }
  double log_mod = 0.0;
  double phase = 0.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    const double mod = std::abs(z[j]);
    if (mod == 0.0) {
      if (alpha[j] < 0) {
        fail(ErrorKind::DomainViolation,
             "monomial: zero coordinate at negative exponent");
      }
      return ComplexScalar(0.0, 0.0);
    }
    const double a = static_cast<double>(alpha[j]);
    log_mod += a * std::log(mod);
    phase += a * std::arg(z[j]);
  }
  return std::polar(std::exp(log_mod), phase);
}

void require_finite(std::span<const ComplexScalar> z, const char* what) {
  for (const auto& c : z) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      fail(ErrorKind::DomainViolation,
           std::string(what) + ": non-finite coordinate");
    }
  }
}

}  // namespace reinhardt
