#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gitcomb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& s);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string rational_string(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace gitcomb
