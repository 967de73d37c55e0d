#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace substfreq {

using BigInt = boost::multiprecision::cpp_int;

// Every frequency in this library is an exact rational; no floating point
// enters any result path.
using Rational = boost::multiprecision::cpp_rational;

/// Reduced "p/q" rendering, denominator always printed ("1/3", "0/1").
std::string fraction_string(const Rational& r);

Rational abs_value(const Rational& r);

}  // namespace substfreq
