#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ccstop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

// "p/q" or "p" for integers.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Accepts "3", "-2/7", "0.3333", "1e-3" is rejected. Decimal input is converted exactly.
Rational parse_rational(std::string_view text);

// ceil(r * n) for r >= 0.
std::int64_t ceil_mul(const Rational& r, std::int64_t n);

// x (x-1) ... (x-k+1); zero once a factor reaches zero.
BigInt falling_factorial(std::int64_t x, std::int64_t k);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace ccstop
