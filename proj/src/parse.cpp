#include "reinhardt/parse.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <string>

#include "reinhardt/errors.hpp"

namespace reinhardt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void bad_token(std::string_view token, const char* why) {
  fail(ErrorKind::ParseError,
       std::string(why) + ": '" + std::string(token) + "'");
}

bool parse_ll(std::string_view s, long long& out) {
  if (s.empty()) return false;
  std::string buf(s);
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(buf.c_str(), &end, 10);
  if (errno != 0 || end != buf.c_str() + buf.size()) return false;
  out = v;
  return true;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  std::string buf(s);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (errno != 0 || end != buf.c_str() + buf.size()) return false;
  out = v;
  return true;
}

// Reads one real literal from the front of s; returns chars consumed (0 on
// failure).
std::size_t read_real(std::string_view s, double& out) {
  std::string buf(s);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || errno != 0) return 0;
  out = v;
  return static_cast<std::size_t>(end - buf.c_str());
}

ComplexScalar parse_complex_token(std::string_view token) {
  const std::string_view orig = token;
  if (token.empty()) bad_token(orig, "empty complex literal");

  double first = 0.0;
  const std::size_t used = read_real(token, first);
  if (used == 0) bad_token(orig, "expected complex literal");
  token.remove_prefix(used);

  if (token.empty()) return ComplexScalar(first, 0.0);
  if (token == "i" || token == "j") return ComplexScalar(0.0, first);

  if (token.front() != '+' && token.front() != '-') {
    bad_token(orig, "trailing characters in complex literal");
  }
  double second = 0.0;
  const std::size_t used2 = read_real(token, second);
  if (used2 == 0 || used2 != token.size() - 1) {
    bad_token(orig, "malformed imaginary part in complex literal");
  }
  const char tail = token.back();
  if (tail != 'i' && tail != 'j') {
    bad_token(orig, "imaginary part must end in 'i'");
  }
  return ComplexScalar(first, second);
}

}  // namespace

ParsedExponents parse_exponent_spec(std::string_view spec) {
  const auto tokens = split_commas(spec);
  ParsedExponents out;
  out.all_exact = true;
  for (const auto token : tokens) {
    if (token.empty()) bad_token(token, "empty exponent entry");
    const std::size_t slash = token.find('/');
    if (slash != std::string_view::npos) {
      long long num = 0, den = 0;
      if (!parse_ll(trim(token.substr(0, slash)), num) ||
          !parse_ll(trim(token.substr(slash + 1)), den) || den == 0) {
        bad_token(token, "malformed fraction in exponent spec");
      }
      if (den < 0) {
        num = -num;
        den = -den;
      }
      out.numerators.push_back(num);
      out.denominators.push_back(den);
      out.values.push_back(static_cast<double>(num) / static_cast<double>(den));
      continue;
    }
    long long as_int = 0;
    if (parse_ll(token, as_int)) {
      out.numerators.push_back(as_int);
      out.denominators.push_back(1);
      out.values.push_back(static_cast<double>(as_int));
      continue;
    }
    double as_double = 0.0;
    if (!parse_double(token, as_double)) {
      bad_token(token, "malformed exponent entry");
    }
    out.all_exact = false;
    out.values.push_back(as_double);
    out.numerators.push_back(0);
    out.denominators.push_back(1);
  }
  if (!out.all_exact) {
    out.numerators.clear();
    out.denominators.clear();
  }
  return out;
}

Point parse_point(std::string_view spec) {
  const auto tokens = split_commas(spec);
  Point p;
  p.reserve(tokens.size());
  for (const auto token : tokens) p.push_back(parse_complex_token(token));
  require_finite(p, "parse_point");
  return p;
}

DomainDescriptor domain_from_spec(std::string_view spec,
                                  TypeOverride override_kind,
                                  const ClassifyOptions& opts) {
  ParsedExponents parsed = parse_exponent_spec(spec);
  ExponentVector alpha(parsed.values);
  if (parsed.all_exact && override_kind != TypeOverride::Irrational) {
    return DomainDescriptor{std::move(alpha),
                            classify_exact(parsed.numerators, parsed.denominators)};
  }
  return make_domain(std::move(alpha), override_kind, opts);
}

}  // namespace reinhardt
