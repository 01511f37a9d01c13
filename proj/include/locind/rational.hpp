#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's rational-vs-integer == recurses under C++20 rewritten
// comparisons; these exact overloads are preferred over its templates.
namespace boost {
#define LOCIND_RATIONAL_EQ(T)                                                   \
  inline bool operator==(const rational<std::int64_t>& a, T b) {                \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b); \
  }                                                                             \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
LOCIND_RATIONAL_EQ(int)
LOCIND_RATIONAL_EQ(long)
LOCIND_RATIONAL_EQ(long long)
LOCIND_RATIONAL_EQ(unsigned)
LOCIND_RATIONAL_EQ(unsigned long)
LOCIND_RATIONAL_EQ(unsigned long long)
#undef LOCIND_RATIONAL_EQ
}  // namespace boost

namespace locind {

using Rational = boost::rational<std::int64_t>;

// Accepts "7", "-3", "7/2" and finite decimals such as "2.5".
Rational parse_rational(std::string_view text);

// Always "p/q", e.g. "5/1".
std::string to_string(const Rational& value);

double to_double(const Rational& value);
std::int64_t floor(const Rational& value);
std::int64_t ceil(const Rational& value);

}  // namespace locind
