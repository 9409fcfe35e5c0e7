#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ocreason {

using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-3", "5/2" or "-10/4" (normalized on construction).
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "7" for integers, "5/2" otherwise.
std::string to_string(const Rational& r);

}  // namespace ocreason
