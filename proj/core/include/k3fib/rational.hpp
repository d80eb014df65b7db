#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20's
// reversed-operand rewriting; exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
} // namespace boost

namespace k3fib {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" when the value is an integer.
std::string to_string(const Rational& r);

/// Inverse of to_string; accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

} // namespace k3fib
