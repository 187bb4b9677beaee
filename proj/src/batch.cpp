#include "reinhardt/batch.hpp"

#include <cstddef>

namespace reinhardt {

std::vector<MetricRow> evaluate_rows(const DomainDescriptor& domain,
                                     const Point& a,
                                     std::span<const Point> points,
                                     Exec mode) {
  require_in_domain(domain.alpha, a, "evaluate_rows");
  for (const Point& z : points) require_in_domain(domain.alpha, z, "evaluate_rows");
  std::vector<MetricRow> rows(points.size());
  for_each_index(mode, points.size(),
                 [&](std::size_t i) { rows[i] = evaluate_all(domain, a, points[i]); });
  return rows;
}

bool lex_less(const Point& x, const Point& y) {
  const std::size_t n = x.size() < y.size() ? x.size() : y.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].real() != y[j].real()) return x[j].real() < y[j].real();
    if (x[j].imag() != y[j].imag()) return x[j].imag() < y[j].imag();
  }
  return x.size() < y.size();
}

std::size_t worst_index(std::span<const double> values,
                        std::span<const Point> witnesses) {
  std::size_t best = kNoIndex;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (best == kNoIndex || values[i] > values[best]) {
      best = i;
    } else if (values[i] == values[best] && i < witnesses.size() &&
               best < witnesses.size() &&
               lex_less(witnesses[i], witnesses[best])) {
      best = i;
    }
  }
  return best;
}

}  // namespace reinhardt
