#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace scrollcalc {

// Every computation path is exact: arbitrary-precision integers and
// rationals, no floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer clamp0(const Integer& x) { return x > 0 ? x : Integer(0); }

// cpp_int division truncates toward zero; partitions need floored division.
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    Integer r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

inline std::size_t to_size(const Integer& x) {
    if (x < 0) throw std::domain_error("to_size: negative value");
    if (x > std::numeric_limits<std::size_t>::max()) throw std::overflow_error("to_size");
    return x.convert_to<std::size_t>();
}

inline long long to_ll(const Integer& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("to_ll: value outside 64-bit range");
    return x.convert_to<long long>();
}

}  // namespace scrollcalc
