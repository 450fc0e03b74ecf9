#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace liespec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

bool is_integer(const BigRat& r);
bool is_positive_integer(const BigRat& r);

// Largest integer n with n <= r.
BigInt rational_floor(const BigRat& r);

// Exact conversion; throws std::invalid_argument if r is not an integer or
// does not fit in long long.
long long to_int64(const BigRat& r);

// Lowest terms; "p/q", or plain "p" when the denominator is one.
std::string rat_string(const BigRat& r);

// Accepts "p" or "p/q" with an optional leading '-' on p and q > 0.
std::optional<BigRat> parse_rational(const std::string& text);

}  // namespace liespec
