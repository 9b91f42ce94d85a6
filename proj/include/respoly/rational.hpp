#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace respoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact conversion; throws if r is not an integer.
Int to_integer(const Rat& r);

// Accepts "p", "-p" or "p/q".
Rat parse_rational(std::string_view text);

// Inverse of parse_rational: "p" when integral, else "p/q".
std::string format_rational(const Rat& r);

// Least integer >= r.
Int ceil_rational(const Rat& r);

} // namespace respoly
