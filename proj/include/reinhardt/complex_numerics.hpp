#ifndef REINHARDT_COMPLEX_NUMERICS_HPP
#define REINHARDT_COMPLEX_NUMERICS_HPP

#include <complex>
#include <span>
#include <vector>

namespace reinhardt {

using ComplexScalar = std::complex<double>;
using Point = std::vector<ComplexScalar>;

/// Carrier for log|z^alpha|. The value is an ordinary real number, or
/// -infinity exactly when the underlying magnitude is exactly zero.
struct LogMagnitude {
  double value;

  bool is_zero() const;             // magnitude == 0, i.e. value == -inf
  double exp_value() const;         // exp(value), exact 0 on the -inf case

  static LogMagnitude of_zero();    // the -inf element
  static LogMagnitude of_log(double log_value);
};

/// Moebius distance on the unit disc: |(z - a) / (1 - conj(a) z)|.
/// Both arguments must lie strictly inside the disc.
double mobius_disc(ComplexScalar a, ComplexScalar z);

/// Sum of alpha_j * log|z_j| over nonzero exponents, term by term in the log
/// domain. Returns -inf iff some z_j == 0 with alpha_j > 0; throws
/// DomainViolation if z_j == 0 with alpha_j < 0. Zero exponents contribute
/// nothing, whatever z_j is.
LogMagnitude log_abs_monomial(std::span<const double> alpha,
                              std::span<const ComplexScalar> z);

/// |z^alpha| = exp(log_abs_monomial(alpha, z)), exact 0 on the -inf case.
double abs_monomial(std::span<const double> alpha,
                    std::span<const ComplexScalar> z);

/// z^alpha as a complex number, for integer exponents (single valued, no
/// branch cuts). Magnitude is assembled in the log domain; the phase is the
/// exponent-weighted sum of arguments.
ComplexScalar monomial(std::span<const long long> alpha,
                       std::span<const ComplexScalar> z);

/// Rejects non-finite coordinates; used at API boundaries.
void require_finite(std::span<const ComplexScalar> z, const char* what);

}  // namespace reinhardt

#endif  // REINHARDT_COMPLEX_NUMERICS_HPP
