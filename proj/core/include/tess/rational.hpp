#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tess {

// All curvature arithmetic is exact; the bounds certified here hinge on
// comparisons as tight as 1/180 vs 1/132, so no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

/// Renders p/q in lowest terms, as "p" when integral.
std::string format_rational(const Q& q);

/// Parses "p", "-p/q" etc. Throws errc::malformed_input on junk.
Q parse_rational(const std::string& s);

BigInt floor_rational(const Q& q);

BigInt factorial(unsigned n);

}  // namespace tess
