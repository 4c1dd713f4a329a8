#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace apportion {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "345", "-7", "22/6" (normalized to 11/3) and finite decimals
// like "3.25" or ".5". Anything else yields nullopt.
std::optional<Rat> parse_rational(const std::string& s);

// "p/q" for fractional values, plain "p" for integers.
std::string format_rational(const Rat& r);

double to_double(const Rat& r);
long double to_long_double(const Rat& r);

}  // namespace apportion
