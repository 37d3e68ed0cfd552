#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace covol {

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int int_denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return int_denominator(q) == 1; }

Int factorial(int n);

// "3", "-7", "2/3" -> Rat; throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

// Canonical form: "num" when the denominator is 1, else "num/den".
std::string rational_to_string(const Rat& q);

}  // namespace covol
