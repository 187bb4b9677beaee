#ifndef REINHARDT_DOMAIN_HPP
#define REINHARDT_DOMAIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reinhardt/complex_numerics.hpp"

namespace reinhardt {

/// Exponent vector alpha of an elementary Reinhardt domain: real entries,
/// nonempty (length 1 arises from zero-exponent splitting), not identically
/// zero, all finite.
struct ExponentVector {
  std::vector<double> entries;

  explicit ExponentVector(std::vector<double> e);
  std::size_t size() const { return entries.size(); }
  std::span<const double> span() const { return entries; }
};

enum class TypeKind { Rational, Irrational };

/// Result of rational/irrational type detection. For the rational kind the
/// primitive vector is the positive rescaling of alpha with integer entries
/// whose nonzero absolute values are coprime, and scale is the t > 0 with
/// t * alpha = primitive (entrywise, up to detection tolerance).
struct TypeClassification {
  TypeKind kind;
  std::vector<long long> primitive;  // empty iff Irrational
  double scale = 0.0;                // 0 iff Irrational
};

struct ClassifyOptions {
  std::int64_t max_denominator = 1'000'000;
  double tolerance = 1e-12;  // relative, per ratio and per entry consistency
};

/// Continued-fraction detection of alpha in R * Z^n. A pivot entry of maximal
/// modulus is fixed; every ratio alpha_j / alpha_k must admit a best rational
/// approximation p/q, q <= max_denominator, with relative error <= tolerance,
/// and the induced common rescaling must reproduce an integer vector
/// entrywise to the same relative tolerance. Zero entries carry through as
/// zeros and impose no constraint.
TypeClassification classify(const ExponentVector& alpha,
                            const ClassifyOptions& opts = {});

/// Exact classification for input given as fractions p_j/q_j. Never falls
/// back to continued fractions; exists so that grammar-level fractions bypass
/// detection entirely.
TypeClassification classify_exact(std::span<const long long> numerators,
                                  std::span<const long long> denominators);

/// Primitive integer vector of a rational-type alpha; throws NotRationalType
/// when detection says Irrational.
std::vector<long long> normalize_rational(const ExponentVector& alpha,
                                          const ClassifyOptions& opts = {});

/// Exponent vector together with its (possibly overridden) classification.
struct DomainDescriptor {
  ExponentVector alpha;
  TypeClassification classification;

  bool rational() const { return classification.kind == TypeKind::Rational; }
  std::size_t dimension() const { return alpha.size(); }
};

enum class TypeOverride { Auto, Rational, Irrational };

/// Builds a descriptor, honoring an explicit type override. Rational override
/// still needs detection to succeed (the primitive vector is required);
/// Irrational override skips detection.
DomainDescriptor make_domain(ExponentVector alpha,
                             TypeOverride override_kind = TypeOverride::Auto,
                             const ClassifyOptions& opts = {});

/// z in C^n(alpha): z_j != 0 wherever alpha_j < 0.
bool member_ambient(const ExponentVector& alpha,
                    std::span<const ComplexScalar> z);

/// z in D_alpha: member_ambient and |z^alpha| < 1 (with |z^alpha| == 0
/// counting as inside).
bool member_domain(const ExponentVector& alpha,
                   std::span<const ComplexScalar> z);

/// Throws NotInDomain with a description of which condition failed.
void require_in_domain(const ExponentVector& alpha,
                       std::span<const ComplexScalar> z, const char* who);

long long gcd_ll(long long a, long long b);

}  // namespace reinhardt

#endif  // REINHARDT_DOMAIN_HPP
