#include "reinhardt/reduction.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "reinhardt/complex_numerics.hpp"
#include "reinhardt/errors.hpp"

namespace reinhardt {

namespace {

void require_same_dimension(const ExponentVector& alpha, const Point& p) {
  if (alpha.size() != p.size()) {
    fail(ErrorKind::DimensionMismatch,
         "point has " + std::to_string(p.size()) +
             " coordinates, exponent vector has " +
             std::to_string(alpha.size()));
  }
}

std::vector<std::size_t> zero_positions(const ExponentVector& alpha) {
  std::vector<std::size_t> kept;
  kept.reserve(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha.entries[j] != 0.0) kept.push_back(j);
  }
  return kept;  // indices that survive the split
}

std::vector<std::size_t> negative_positions(const ExponentVector& alpha) {
  std::vector<std::size_t> neg;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha.entries[j] < 0.0) neg.push_back(j);
  }
  return neg;
}

ExponentVector select_entries(const ExponentVector& alpha,
                              const std::vector<std::size_t>& kept) {
  std::vector<double> entries;
  entries.reserve(kept.size());
  for (std::size_t j : kept) entries.push_back(alpha.entries[j]);
  return ExponentVector(std::move(entries));
}

Point select_coordinates(const Point& p,
                         const std::vector<std::size_t>& kept) {
  Point out;
  out.reserve(kept.size());
  for (std::size_t j : kept) out.push_back(p[j]);
  return out;
}

ExponentVector flip_entries(const ExponentVector& alpha,
                            const std::vector<std::size_t>& neg) {
  std::vector<double> entries = alpha.entries;
  for (std::size_t j : neg) entries[j] = -entries[j];
  return ExponentVector(std::move(entries));
}

Point invert_coordinates(const Point& p,
                         const std::vector<std::size_t>& neg) {
  Point out = p;
  for (std::size_t j : neg) {
    if (out[j] == ComplexScalar(0.0, 0.0)) {
      fail(ErrorKind::DomainViolation,
           "cannot invert zero coordinate " + std::to_string(j));
    }
    out[j] = 1.0 / out[j];
  }
  return out;
}

}  // namespace

std::pair<ExponentVector, Point> split_zero_exponents(
    const ExponentVector& alpha, const Point& p) {
  require_same_dimension(alpha, p);
  const auto kept = zero_positions(alpha);
  if (kept.size() == alpha.size()) return {alpha, p};
  return {select_entries(alpha, kept), select_coordinates(p, kept)};
}

std::pair<ExponentVector, Point> invert_negative_exponents(
    const ExponentVector& alpha, const Point& p) {
  require_same_dimension(alpha, p);
  const auto neg = negative_positions(alpha);
  if (neg.empty()) return {alpha, p};
  return {flip_entries(alpha, neg), invert_coordinates(p, neg)};
}

Point rotate(const Point& p, std::span<const double> thetas) {
  if (p.size() != thetas.size()) {
    fail(ErrorKind::DimensionMismatch,
         "rotation needs one angle per coordinate");
  }
  Point out;
  out.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    out.push_back(std::polar(1.0, thetas[j]) * p[j]);
  }
  return out;
}

namespace {

void require_all_positive(const ExponentVector& alpha) {
  for (double a : alpha.entries) {
    if (!(a > 0.0)) {
      fail(ErrorKind::PreconditionViolation,
           "covering construction needs strictly positive exponents");
    }
  }
}

}  // namespace

Point covering_map(const ExponentVector& alpha, const Point& lambda) {
  require_all_positive(alpha);
  require_same_dimension(alpha, lambda);
  const std::size_t n = alpha.size();
  const ComplexScalar last_in = lambda[n - 1];
  if (!(std::abs(last_in) < 1.0)) {
    fail(ErrorKind::DomainViolation,
         "last coordinate must lie in the unit disc");
  }
  const double an = alpha.entries[n - 1];
  double shift_re = 0.0;
  double shift_im = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double aj = alpha.entries[j] / an;
    shift_re += aj * lambda[j].real();
    shift_im += aj * lambda[j].imag();
  }
  Point out;
  out.reserve(n);
  for (std::size_t j = 0; j + 1 < n; ++j) out.push_back(std::exp(lambda[j]));
  if (last_in == ComplexScalar(0.0, 0.0)) {
    out.push_back(ComplexScalar(0.0, 0.0));
  } else {
    // Assemble the last coordinate in log-polar form so huge |shift_re|
    // degrades gracefully instead of overflowing intermediates.
    const double log_mod = std::log(std::abs(last_in)) - shift_re;
    const double arg = std::arg(last_in) - shift_im;
    out.push_back(std::polar(std::exp(log_mod), arg));
  }
  return out;
}

Point covering_preimage(const ExponentVector& alpha, const Point& z) {
  require_all_positive(alpha);
  require_same_dimension(alpha, z);
  const std::size_t n = alpha.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (z[j] == ComplexScalar(0.0, 0.0)) {
      fail(ErrorKind::DomainViolation,
           "leading coordinates must be nonzero, coordinate " +
               std::to_string(j) + " is zero");
    }
  }
  const LogMagnitude lm = log_abs_monomial(alpha.span(), z);
  if (!(lm.is_zero() || lm.value < 0.0)) {
    fail(ErrorKind::NotInDomain, "point is outside the domain");
  }
  const double an = alpha.entries[n - 1];
  Point lambda;
  lambda.reserve(n);
  double log_mod = 0.0;
  double arg = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const ComplexScalar lj(std::log(std::abs(z[j])), std::arg(z[j]));
    lambda.push_back(lj);
    const double aj = alpha.entries[j] / an;
    log_mod += aj * lj.real();
    arg += aj * lj.imag();
  }
  if (z[n - 1] == ComplexScalar(0.0, 0.0)) {
    lambda.push_back(ComplexScalar(0.0, 0.0));
  } else {
    log_mod += std::log(std::abs(z[n - 1]));
    arg += std::arg(z[n - 1]);
    lambda.push_back(std::polar(std::exp(log_mod), arg));
  }
  return lambda;
}

namespace {

void require_index_bound(const std::vector<std::size_t>& indices,
                         std::size_t n) {
  for (std::size_t j : indices) {
    if (j >= n) {
      fail(ErrorKind::PreconditionViolation,
           "step index " + std::to_string(j) + " out of range");
    }
  }
}

std::pair<double, double> scale_factors(const ReductionStep& step) {
  if (step.parameters.empty() || step.parameters.size() > 2) {
    fail(ErrorKind::PreconditionViolation,
         "scale step needs one or two positive factors");
  }
  const double num = step.parameters[0];
  const double den = step.parameters.size() == 2 ? step.parameters[1] : 1.0;
  if (!(num > 0.0) || !std::isfinite(num) || !(den > 0.0) ||
      !std::isfinite(den)) {
    fail(ErrorKind::PreconditionViolation,
         "scale step factors must be positive and finite");
  }
  return {num, den};
}

}  // namespace

std::pair<ExponentVector, Point> apply_step(const ReductionStep& step,
                                            const ExponentVector& alpha,
                                            const Point& p) {
  require_same_dimension(alpha, p);
  const std::size_t n = alpha.size();
  switch (step.kind) {
    case ReductionStep::Kind::SplitZeros:
      require_index_bound(step.indices, n);
      return {select_entries(alpha, step.indices),
              select_coordinates(p, step.indices)};
    case ReductionStep::Kind::InvertNegatives:
      require_index_bound(step.indices, n);
      return {flip_entries(alpha, step.indices),
              invert_coordinates(p, step.indices)};
    case ReductionStep::Kind::Rotate: {
      if (step.parameters.size() != n) {
        fail(ErrorKind::PreconditionViolation,
             "rotation step needs one angle per coordinate");
      }
      return {alpha, rotate(p, step.parameters)};
    }
    case ReductionStep::Kind::Permute: {
      if (step.indices.size() != n) {
        fail(ErrorKind::PreconditionViolation,
             "permutation step must cover every coordinate");
      }
      require_index_bound(step.indices, n);
      std::vector<bool> seen(n, false);
      for (std::size_t j : step.indices) {
        if (seen[j]) {
          fail(ErrorKind::PreconditionViolation,
               "permutation step repeats index " + std::to_string(j));
        }
        seen[j] = true;
      }
      return {select_entries(alpha, step.indices),
              select_coordinates(p, step.indices)};
    }
    case ReductionStep::Kind::Scale: {
      const auto [num, den] = scale_factors(step);
      std::vector<double> entries = alpha.entries;
      for (double& e : entries) e = e * num / den;
      return {ExponentVector(std::move(entries)), p};
    }
  }
  fail(ErrorKind::PreconditionViolation, "unknown reduction step");
}

std::pair<ExponentVector, Point> apply_trace(const ReductionTrace& trace,
                                             const ExponentVector& alpha,
                                             const Point& p) {
  ExponentVector cur_alpha = alpha;
  Point cur_p = p;
  for (const ReductionStep& step : trace.steps) {
    auto next = apply_step(step, cur_alpha, cur_p);
    cur_alpha = std::move(next.first);
    cur_p = std::move(next.second);
  }
  return {std::move(cur_alpha), std::move(cur_p)};
}

DomainDescriptor apply_trace_domain(const ReductionTrace& trace,
                                    const DomainDescriptor& domain) {
  std::vector<double> entries = domain.alpha.entries;
  std::vector<long long> prim = domain.classification.primitive;
  for (const ReductionStep& step : trace.steps) {
    require_index_bound(step.indices, entries.size());
    switch (step.kind) {
      case ReductionStep::Kind::SplitZeros:
      case ReductionStep::Kind::Permute: {
        std::vector<double> e2;
        std::vector<long long> p2;
        e2.reserve(step.indices.size());
        for (std::size_t j : step.indices) {
          e2.push_back(entries[j]);
          if (!prim.empty()) p2.push_back(prim[j]);
        }
        entries = std::move(e2);
        prim = std::move(p2);
        break;
      }
      case ReductionStep::Kind::InvertNegatives:
        for (std::size_t j : step.indices) {
          entries[j] = -entries[j];
          if (!prim.empty()) prim[j] = -prim[j];
        }
        break;
      case ReductionStep::Kind::Rotate:
        break;
      case ReductionStep::Kind::Scale: {
        const auto [num, den] = scale_factors(step);
        for (double& e : entries) e = e * num / den;
        break;
      }
    }
  }
  TypeClassification cls{domain.classification.kind, prim, 0.0};
  if (!prim.empty()) {
    for (std::size_t j = 0; j < prim.size(); ++j) {
      if (prim[j] != 0) {
        cls.scale = static_cast<double>(prim[j]) / entries[j];
        break;
      }
    }
  }
  return DomainDescriptor{ExponentVector(std::move(entries)), std::move(cls)};
}

ReducedSystem reduce_to_positive(const ExponentVector& alpha,
                                 const std::vector<Point>& points) {
  for (const Point& p : points) require_same_dimension(alpha, p);

  ReducedSystem sys{alpha, points, {}};

  const auto kept = zero_positions(sys.alpha);
  if (kept.size() < sys.alpha.size()) {
    ReductionStep step{ReductionStep::Kind::SplitZeros, kept, {}};
    ExponentVector next_alpha = select_entries(sys.alpha, kept);
    for (Point& p : sys.points) p = select_coordinates(p, kept);
    sys.alpha = std::move(next_alpha);
    sys.trace.steps.push_back(std::move(step));
  }

  const auto neg = negative_positions(sys.alpha);
  if (!neg.empty()) {
    ReductionStep step{ReductionStep::Kind::InvertNegatives, neg, {}};
    ExponentVector next_alpha = flip_entries(sys.alpha, neg);
    for (Point& p : sys.points) p = invert_coordinates(p, neg);
    sys.alpha = std::move(next_alpha);
    sys.trace.steps.push_back(std::move(step));
  }

  return sys;
}

}  // namespace reinhardt
