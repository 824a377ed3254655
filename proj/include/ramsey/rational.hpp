#ifndef RAMSEY_RATIONAL_HPP
#define RAMSEY_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace ramsey {

// All densities and thresholds in this library are exact rationals.
// Magnitudes stay small (vertex counts and their squares), so a 64-bit
// numerator/denominator is plenty.
using Rat = boost::rational<long long>;

// Accepts "3", "-2", "1/200" and decimal strings like "0.005" (converted
// exactly). Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

std::string format_rational(const Rat& r);

long long floor_rat(const Rat& r);
long long ceil_rat(const Rat& r);

// Exact comparisons against irrational thresholds of the form c*sqrt(x),
// with c >= 0 and x >= 0. Used for the eta^(1/2) and eps^(1/2) bounds.
bool le_scaled_sqrt(const Rat& a, const Rat& c, const Rat& x);  // a <= c*sqrt(x)
bool ge_scaled_sqrt(const Rat& a, const Rat& c, const Rat& x);  // a >= c*sqrt(x)

}  // namespace ramsey

#endif
