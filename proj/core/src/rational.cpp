#include "tpx/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace tpx {

namespace {

constexpr std::int64_t kMax = INT64_MAX;

// Accumulates decimal digits with overflow detection.
std::int64_t push_digit(std::int64_t acc, char digit) {
    if (acc > (kMax - (digit - '0')) / 10) {
        throw std::invalid_argument("number out of range");
    }
    return acc * 10 + (digit - '0');
}

std::int64_t pow10_checked(int exponent) {
    std::int64_t p = 1;
    for (int i = 0; i < exponent; ++i) {
        if (p > kMax / 10) throw std::invalid_argument("number out of range");
        p *= 10;
    }
    return p;
}

} // namespace

Rational parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    std::int64_t digits = 0;
    int int_digits = 0;
    int frac_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits = push_digit(digits, text[pos]);
        ++int_digits;
        ++pos;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits = push_digit(digits, text[pos]);
            ++frac_digits;
            ++pos;
        }
    }
    if (pos != text.size() || int_digits + frac_digits == 0) {
        throw std::invalid_argument("expected an integer or plain decimal literal, got \"" +
                                    std::string(text) + "\"");
    }

    Rational value(digits, pow10_checked(frac_digits));
    return negative ? -value : value;
}

std::string to_decimal_string(const Rational& r) {
    std::int64_t num = r.numerator();
    std::int64_t den = r.denominator(); // boost keeps den > 0, fraction reduced
    if (den == 1) return std::to_string(num);

    // Finite decimal expansion exists iff den = 2^a * 5^b.
    std::int64_t rest = den;
    int twos = 0;
    int fives = 0;
    while (rest % 2 == 0) { rest /= 2; ++twos; }
    while (rest % 5 == 0) { rest /= 5; ++fives; }
    if (rest != 1) return std::to_string(num) + "/" + std::to_string(den);

    int places = twos > fives ? twos : fives;
    // Scale numerator to den * 10^places / den = 10^places.
    std::int64_t scale = 1;
    for (int i = 0; i < places - twos; ++i) scale *= 2;
    for (int i = 0; i < places - fives; ++i) scale *= 5;
    bool negative = num < 0;
    std::uint64_t scaled = (negative ? static_cast<std::uint64_t>(-(num + 1)) + 1
                                     : static_cast<std::uint64_t>(num)) *
                           static_cast<std::uint64_t>(scale);
    std::uint64_t p10 = 1;
    for (int i = 0; i < places; ++i) p10 *= 10;

    std::string frac = std::to_string(scaled % p10);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    std::string out = negative ? "-" : "";
    out += std::to_string(scaled / p10);
    out += '.';
    out += frac;
    return out;
}

std::string format_fixed(const Rational& r, int digits) {
    if (digits < 0) throw std::invalid_argument("digits must be >= 0");
    bool negative = r < Rational(0);
    Rational mag = negative ? -r : r;

    // round(|r| * 10^digits) half away from zero = floor(scaled + 1/2).
    Rational scaled = mag * Rational(pow10_checked(digits)) + Rational(1, 2);
    std::int64_t rounded = scaled.numerator() / scaled.denominator();

    std::int64_t p10 = pow10_checked(digits);
    std::string out = negative && rounded != 0 ? "-" : "";
    out += std::to_string(rounded / p10);
    if (digits > 0) {
        std::string frac = std::to_string(rounded % p10);
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        out += '.';
        out += frac;
    }
    return out;
}

} // namespace tpx
