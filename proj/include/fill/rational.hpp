#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fill/errors.hpp"

namespace fill {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always normalized (lowest terms, positive denominator).
// Arbitrary precision; no floating point anywhere in the project.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor of p/q with mathematical (round toward -infinity) semantics.
BigInt rat_floor(const Rational& r);

// Serialized as "p/q", denominator always present.
std::string rat_to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p". Throws ValidationError on malformed input.
Rational rat_parse(const std::string& text);

} // namespace fill
