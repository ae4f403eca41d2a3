#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace repbasis {

/// Arbitrary-precision signed integer used for every set element and constant.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Int parse_int(std::string_view text);

/// Parses "p/q" or a plain integer. Throws std::invalid_argument (also on q == 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rational& value);

inline Int abs_value(const Int& value) { return value < 0 ? Int(-value) : value; }

/// Narrowing conversion; throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Int& value);

}  // namespace repbasis
