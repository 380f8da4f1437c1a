#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ultrafree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "P/Q" or "P". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Smallest integer >= q.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

/// Upper bound on Euler's number used by every exact packing bound.
Rational e_upper();

Rational pow(const Rational& base, unsigned exponent);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace ultrafree
