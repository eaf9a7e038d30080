/**
 * @file rational.hpp
 * @brief Exact rational numbers and checked integer helpers.
 *
 * Every wall center, squared radius, Γ-slope and path crossing is carried as
 * an exact rational. Floats only appear when something is displayed.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3walls {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// num/den for any nonzero den. cpp_rational's own two-argument
/// constructor rejects negative denominators.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q" or a finite decimal such as "-10.5".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

BigInt numerator_of(const Rational& q);
BigInt denominator_of(const Rational& q);

/// Narrowing conversion; throws std::overflow_error when out of range.
std::int64_t to_int64(const BigInt& value);

/// Largest integer ≤ q.
BigInt floor_of(const Rational& q);
/// Smallest integer ≥ q.
BigInt ceil_of(const Rational& q);

/// Exact square root of a non-negative integer, if it is a perfect square.
bool is_perfect_square(std::int64_t value, std::int64_t* root = nullptr);

namespace checked {

std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);

}  // namespace checked

}  // namespace k3walls
