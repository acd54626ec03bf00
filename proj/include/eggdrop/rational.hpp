#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace eggdrop {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

Int floor_int(const Rational& r);
Int ceil_int(const Rational& r);
bool is_integral(const Rational& r);
double to_double(const Rational& r);

// Rounds to the nearest integer, ties upward.
Int round_half_up(const Rational& r);

// First continued-fraction convergent of x within `rel` relative error.
Rational approximate(double x, double rel = 1e-12);

// Always "p/q", including integers ("6/1").
std::string to_fraction(const Rational& r);

// Accepts "p/q", "p", or a finite decimal such as "3.5". Throws DomainError.
Rational parse_rational(std::string_view text);

}  // namespace eggdrop
