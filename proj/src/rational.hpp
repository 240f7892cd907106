// Exact rational scalar used for every coordinate and every predicate.
// Backed by boost::multiprecision; always stored in lowest terms with a
// positive denominator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simpdeg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "p" or "p/q" with q > 0 after canonicalization. Returns nullopt on syntax
// errors or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Lowest-terms text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

using Point = std::vector<Rational>;

std::string to_string(const Point& p);

inline Point negated(const Point& p) {
  Point out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = -p[i];
  return out;
}

}  // namespace simpdeg
