#ifndef REINHARDT_PARSE_HPP
#define REINHARDT_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "reinhardt/domain.hpp"

namespace reinhardt {

/// Parsed exponent spec. Entries written as INT or INT/INT are exact; when
/// every entry is exact the classification can bypass continued-fraction
/// detection entirely.
struct ParsedExponents {
  std::vector<double> values;
  bool all_exact = false;
  std::vector<long long> numerators;    // valid iff all_exact
  std::vector<long long> denominators;  // valid iff all_exact, all > 0
};

/// Grammar: comma-separated entries, each INT, INT/INT, or a decimal literal.
/// Example: "3/2,1,-2". Throws ParseError naming the offending token.
ParsedExponents parse_exponent_spec(std::string_view spec);

/// Grammar: comma-separated complex literals re[+im i], e.g. "0.5,0.5" or
/// "0.5+0.1i,0.3" or "-0.2i". Throws ParseError naming the offending token.
Point parse_point(std::string_view spec);

/// Builds a domain descriptor from a spec string, using the exact-fraction
/// path when available and continued-fraction detection otherwise.
DomainDescriptor domain_from_spec(std::string_view spec,
                                  TypeOverride override_kind = TypeOverride::Auto,
                                  const ClassifyOptions& opts = {});

}  // namespace reinhardt

#endif  // REINHARDT_PARSE_HPP
