#pragma once

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace floorcount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Natural logarithm of a positive integer of any size. Large values are
// split as x = m * 2^s with m in double range.
inline double log_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_big: argument must be positive");
    if (x == 1) return 0.0;
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 960) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 64;
    const BigInt mantissa = x >> shift;
    return std::log(mantissa.convert_to<double>()) +
           static_cast<double>(shift) * std::log(2.0);
}

}  // namespace floorcount
