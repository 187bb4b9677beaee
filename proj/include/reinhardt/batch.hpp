#ifndef REINHARDT_BATCH_HPP
#define REINHARDT_BATCH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/metrics.hpp"

namespace reinhardt {

/// Execution policy for the data-parallel kernels. Parallel uses OpenMP when
/// available. Both policies fill per-index buffers and reduce them in one
/// serial pass afterwards, so results are bit-identical across policies and
/// thread counts.
enum class Exec { Serial, Parallel };

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

template <typename F>
void for_each_index(Exec mode, std::size_t n, F&& body) {
  if (mode == Exec::Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

/// Evaluates all three functions with base point a at every point.
/// Points are validated serially up front so the parallel region never
/// propagates exceptions.
std::vector<MetricRow> evaluate_rows(const DomainDescriptor& domain,
                                     const Point& a,
                                     std::span<const Point> points,
                                     Exec mode);

/// Coordinatewise (re, im) lexicographic order; used to pick a canonical
/// worst-case witness among exact ties.
bool lex_less(const Point& x, const Point& y);

/// Serial reduction: index of the largest value, ties broken toward the
/// lexicographically smallest witness point. kNoIndex for empty input.
std::size_t worst_index(std::span<const double> values,
                        std::span<const Point> witnesses);

}  // namespace reinhardt

#endif  // REINHARDT_BATCH_HPP
