#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace d2kit {

/// Arbitrary-precision integer used for every coefficient in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal string. Throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

}  // namespace d2kit
