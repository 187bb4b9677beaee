#include "reinhardt/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "reinhardt/errors.hpp"

namespace reinhardt {

namespace {

// lcm may exceed any sensible primitive vector long before it overflows;
// candidates past this bound are treated as evidence of irrationality.
constexpr long long kLcmCap = 1'000'000'000'000'000LL;  // 1e15

struct BestApprox {
  long long num = 0;
  long long den = 1;
  double err = 0.0;  // |x - num/den|
};

// Best rational approximation of x in [0, 1] with denominator <= max_den:
// continued-fraction convergents plus the final semiconvergent, whichever is
// closer. err is evaluated as |x - fl(num/den)|, which is exact up to the
// rounding of num/den (Sterbenz subtraction).
BestApprox best_rational_approx(double x, long long max_den) {
  BestApprox best{std::llround(x), 1, std::abs(x - std::round(x))};
  long long p_prev = 1, q_prev = 0;              // convergent k-1
  long long p_cur = static_cast<long long>(std::floor(x)), q_cur = 1;  // k
  double y = x - std::floor(x);
  for (int iter = 0; iter < 64 && y != 0.0 && best.err != 0.0; ++iter) {
    y = 1.0 / y;
    const double a_f = std::floor(y);
    if (!(a_f < 2.0e18)) break;  // partial quotient beyond exact range
    const long long a = static_cast<long long>(a_f);
    y -= a_f;
    const long long m_allowed = (max_den - q_prev) / q_cur;
    if (a > m_allowed) {
      // next convergent would exceed max_den; the largest semiconvergent is
      // the only remaining candidate
      if (m_allowed >= 1) {
        const long long ps = p_prev + m_allowed * p_cur;
        const long long qs = q_prev + m_allowed * q_cur;
        const double err_s =
            std::abs(x - static_cast<double>(ps) / static_cast<double>(qs));
        if (err_s < best.err) best = {ps, qs, err_s};
      }
      return best;
    }
    const long long p_next = a * p_cur + p_prev;
    const long long q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    const double err =
        std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur));
    if (err < best.err) best = {p_cur, q_cur, err};
  }
  return best;
}

long long checked_lcm(long long a, long long b) {
  const long long g = gcd_ll(a, b);
  const long long step = a / g;
  if (step != 0 && b > kLcmCap / step) return -1;
  return step * b;
}

TypeClassification irrational() {
  return TypeClassification{TypeKind::Irrational, {}, 0.0};
}

}  // namespace

long long gcd_ll(long long a, long long b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

ExponentVector::ExponentVector(std::vector<double> e) : entries(std::move(e)) {
  if (entries.empty()) {
    fail(ErrorKind::InvalidExponent, "exponent vector must be nonempty");
  }
  bool any_nonzero = false;
  for (double v : entries) {
    if (!std::isfinite(v)) {
      fail(ErrorKind::InvalidExponent, "exponent entries must be finite");
    }
    any_nonzero = any_nonzero || v != 0.0;
  }
  if (!any_nonzero) {
    fail(ErrorKind::InvalidExponent, "exponent vector must not be identically zero");
  }
}

TypeClassification classify(const ExponentVector& alpha,
                            const ClassifyOptions& opts) {
  if (opts.max_denominator < 1 || !(opts.tolerance > 0.0)) {
    fail(ErrorKind::PreconditionViolation,
         "classify: max_denominator >= 1 and tolerance > 0 required");
  }
  const auto& a = alpha.entries;
  const std::size_t n = a.size();

  // pivot: nonzero entry of maximal modulus (first among ties)
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] != 0.0 && (pivot == n || std::abs(a[j]) > std::abs(a[pivot]))) {
      pivot = j;
    }
  }

  std::vector<long long> num(n, 0), den(n, 1);
  long long lcm = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] == 0.0) continue;
    const double ratio = a[j] / a[pivot];
    const BestApprox ba = best_rational_approx(std::abs(ratio), opts.max_denominator);
    if (ba.err > opts.tolerance * std::abs(ratio)) return irrational();
    num[j] = (ratio < 0.0 ? -ba.num : ba.num);
    den[j] = ba.den;
    lcm = checked_lcm(lcm, ba.den);
    if (lcm < 0) return irrational();
  }

  std::vector<long long> entries(n, 0);
  long long g = 0;
  const long long pivot_sign = a[pivot] > 0.0 ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] == 0.0) continue;
    entries[j] = pivot_sign * num[j] * (lcm / den[j]);
    g = gcd_ll(g, entries[j]);
  }
  for (auto& e : entries) e /= g;

  const double scale = static_cast<double>(entries[pivot]) / a[pivot];
  for (std::size_t j = 0; j < n; ++j) {
    const double target = static_cast<double>(entries[j]);
    if (std::abs(scale * a[j] - target) >
        opts.tolerance * std::max(1.0, std::abs(target))) {
      return irrational();
    }
  }
  return TypeClassification{TypeKind::Rational, std::move(entries), scale};
}

TypeClassification classify_exact(std::span<const long long> numerators,
                                  std::span<const long long> denominators) {
  const std::size_t n = numerators.size();
  if (n == 0 || denominators.size() != n) {
    fail(ErrorKind::InvalidExponent, "classify_exact: bad fraction vectors");
  }
  long long lcm = 1;
  bool any_nonzero = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (denominators[j] <= 0) {
      fail(ErrorKind::InvalidExponent, "classify_exact: denominator must be positive");
    }
    if (numerators[j] == 0) continue;
    any_nonzero = true;
    const long long g = gcd_ll(numerators[j], denominators[j]);
    lcm = checked_lcm(lcm, denominators[j] / g);
    if (lcm < 0) {
      fail(ErrorKind::InvalidExponent, "classify_exact: common denominator overflow");
    }
  }
  if (!any_nonzero) {
    fail(ErrorKind::InvalidExponent, "exponent vector must not be identically zero");
  }
  std::vector<long long> entries(n, 0);
  long long g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (numerators[j] == 0) continue;
    const long long red = gcd_ll(numerators[j], denominators[j]);
    const __int128 e = static_cast<__int128>(numerators[j] / red) *
                       (lcm / (denominators[j] / red));
    if (e > kLcmCap || e < -static_cast<__int128>(kLcmCap)) {
      fail(ErrorKind::InvalidExponent, "classify_exact: integer entry overflow");
    }
    entries[j] = static_cast<long long>(e);
    g = gcd_ll(g, entries[j]);
  }
  for (auto& e : entries) e /= g;
  return TypeClassification{TypeKind::Rational, std::move(entries),
                            static_cast<double>(lcm) / static_cast<double>(g)};
}

std::vector<long long> normalize_rational(const ExponentVector& alpha,
                                          const ClassifyOptions& opts) {
  TypeClassification cls = classify(alpha, opts);
  if (cls.kind != TypeKind::Rational) {
    fail(ErrorKind::NotRationalType,
         "normalize_rational: exponent vector is not of rational type");
  }
  return std::move(cls.primitive);
}

DomainDescriptor make_domain(ExponentVector alpha, TypeOverride override_kind,
                             const ClassifyOptions& opts) {
  switch (override_kind) {
    case TypeOverride::Irrational:
      return DomainDescriptor{std::move(alpha), irrational()};
    case TypeOverride::Rational: {
      TypeClassification cls = classify(alpha, opts);
      if (cls.kind != TypeKind::Rational) {
        fail(ErrorKind::NotRationalType,
             "type forced to rational but no rational structure found within "
             "the detection bounds");
      }
      return DomainDescriptor{std::move(alpha), std::move(cls)};
    }
    case TypeOverride::Auto:
    default: {
      TypeClassification cls = classify(alpha, opts);
      return DomainDescriptor{std::move(alpha), std::move(cls)};
    }
  }
}

bool member_ambient(const ExponentVector& alpha,
                    std::span<const ComplexScalar> z) {
  if (alpha.size() != z.size()) {
    fail(ErrorKind::DimensionMismatch, "member_ambient: length mismatch");
  }
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (alpha.entries[j] < 0.0 && z[j] == ComplexScalar(0.0, 0.0)) return false;
  }
  return true;
}

bool member_domain(const ExponentVector& alpha,
                   std::span<const ComplexScalar> z) {
  if (!member_ambient(alpha, z)) return false;
  const LogMagnitude lm = log_abs_monomial(alpha.span(), z);
  return lm.is_zero() || lm.value < 0.0;
}

void require_in_domain(const ExponentVector& alpha,
                       std::span<const ComplexScalar> z, const char* who) {
  if (alpha.size() != z.size()) {
    fail(ErrorKind::DimensionMismatch, std::string(who) + ": length mismatch");
  }
  if (!member_ambient(alpha, z)) {
    fail(ErrorKind::NotInDomain,
         std::string(who) +
             ": point has a zero coordinate at a negative exponent "
             "(outside C^n(alpha))");
  }
  if (!member_domain(alpha, z)) {
    fail(ErrorKind::NotInDomain,
         std::string(who) + ": |z^alpha| >= 1, point lies outside the domain");
  }
}

}  // namespace reinhardt
