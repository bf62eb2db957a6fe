#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace walkcount {

// Exact arithmetic backing every counting result. Walk counts grow like
// lambda^k, so fixed-width integers are not an option anywhere counts live.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// base^exp with the 0^0 = 1 convention.
inline BigCount int_pow(const BigCount& base, int exp) {
    BigCount result = 1;
    for (int i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

inline Rational rational_pow(const Rational& base, int exp) {
    Rational result = 1;
    for (int i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

inline double to_double(const BigCount& value) {
    return value.template convert_to<double>();
}

}  // namespace walkcount
