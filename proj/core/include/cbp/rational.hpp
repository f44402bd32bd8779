#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

namespace cbp {

// All correctness-bearing arithmetic runs on exact rationals with
// arbitrary-precision integers. Adversarial instances use sizes like
// 1/(5^i * 6n), which no fixed-width representation can hold.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// Smallest integer >= r.
BigInt ceil_rational(const Rational& r);

std::int64_t ceil_to_int64(const Rational& r);

// "0" for zero, "k" for integers, "num/den" otherwise.
std::string to_string(const Rational& r);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

std::size_t hash_value(const Rational& r);

}  // namespace cbp
