#ifndef TPX_RATIONAL_HPP
#define TPX_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace tpx {

/// Exact rational arithmetic for transmission costs and probability bounds.
/// Optimality comparisons in the solver are exact, never floating point.
using Rational = boost::rational<std::int64_t>;

/// Parses an integer or plain decimal literal ("7", "-3", "2.5", "0.000125")
/// into an exact rational. Rejects anything else, including scientific
/// notation, with std::invalid_argument.
Rational parse_decimal(std::string_view text);

/// Exact rendering. Positional decimal notation when the reduced denominator
/// is of the form 2^a * 5^b (the only case with a finite expansion),
/// "num/den" otherwise.
std::string to_decimal_string(const Rational& r);

/// Fixed-point rendering with the given number of fractional digits,
/// rounding half away from zero ("0.9609375" -> "0.9609" at 4 digits).
std::string format_fixed(const Rational& r, int digits);

} // namespace tpx

#endif // TPX_RATIONAL_HPP
