#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kostantq {

/// Arbitrary-precision signed integer. Counts grow like 5^rank, so fixed-width
/// integers overflow near rank 30; everything exact in this library sits on
/// this type.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

}  // namespace kostantq
