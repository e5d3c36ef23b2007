#pragma once

// Exact scalars for tabulated utilities.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace qleontief {

using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or a finite decimal such as "-1.25". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace qleontief
