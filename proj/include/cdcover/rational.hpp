#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cdcover {

// All exact arithmetic in this library runs on arbitrary-precision
// integers and rationals. cpp_rational keeps values reduced to lowest
// terms with a positive denominator, which is exactly the canonical
// form the rest of the code relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "numerator/denominator" form, denominator always printed
/// ("19/20", "1/1", "0/1").
std::string to_fraction_string(const Rational& value);

}  // namespace cdcover
