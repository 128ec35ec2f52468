#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tablecast {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint32_t n);
BigInt binomial(std::uint32_t n, std::uint32_t k);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering computed from the exact value by integer arithmetic.
///
/// Values with magnitude in [1e-4, 1e15) are printed in fixed notation with
/// at most `significant` significant digits and no trailing zeros, so 133/20
/// renders as "6.65". Smaller and larger magnitudes use scientific notation
/// ("5.41254e-06"). Rounding is half away from zero on the exact value.
std::string to_decimal_string(const Rational& value, int significant = 12);

double to_double(const Rational& value);

}  // namespace tablecast
